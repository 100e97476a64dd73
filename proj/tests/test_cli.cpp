#include "icstalk/cli.hpp"

#include "golden_cases.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace icstalk;
using icstalk::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, OrbitsRankOne) {
  const auto r = run({"orbits", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["orbits"].size(), 3u);
  EXPECT_EQ(j["orbits"][0]["partition"], Json::array({3}));
  EXPECT_EQ(j["orbits"][0]["dim"], 3);
  EXPECT_EQ(j["orbits"][1]["dim"], 2);
  EXPECT_EQ(j["orbits"][2]["dim"], 0);
  EXPECT_EQ(Json::parse(run({"orbits", "--n", "3", "--format", "json"}).out)["orbits"].size(), 15u);
}

TEST(Cli, JsonRoundTripsByteIdentically) {
  for (const auto& c : golden::cases()) {
    const auto r = run(c.args);
    ASSERT_EQ(r.code, 0) << c.file << ": " << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out) << c.file;
  }
}

TEST(Cli, GoldenFilesAreByteStable) {
  for (const auto& c : golden::cases()) {
    std::string expected;
    ASSERT_TRUE(golden::read(c, expected)) << "missing " << golden::path(c);
    EXPECT_EQ(run(c.args).out, expected) << c.file;
  }
}

TEST(Cli, StalksCheck) {
  const auto r = run({"stalks", "--n", "2", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f_1 = q^-2"), std::string::npos);
  EXPECT_NE(r.out.find("f_2 = q^-3 + q^-1"), std::string::npos);
  const auto j = Json::parse(run({"stalks", "--n", "2", "--check", "--format", "json"}).out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_TRUE(j["check"]["passed"].get<bool>());
  EXPECT_EQ(poly_from_json(j["f"][2]), LaurentPoly::monomial(-3) + LaurentPoly::monomial(-1));
  EXPECT_EQ(poly_from_json(j["t"][1][0]), LaurentPoly::from_coefficients({1, 1, 1}, -1));
}

TEST(Cli, Fano) {
  const auto r = run({"fano", "--n", "2", "--i", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("b_0 = 16"), std::string::npos);
  const auto j = Json::parse(run({"fano", "--n", "2", "--i", "1", "--format", "json"}).out);
  EXPECT_EQ(j["rows"][1]["betti"], 6);
  EXPECT_EQ(j["rows"][1]["degree"], 2);
  EXPECT_EQ(run({"fano", "--n", "2", "--i", "3"}).code, 2);
}

TEST(Cli, Kostka) {
  const auto r = run({"kostka", "--shape", "2,1", "--weight", "1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 2"), std::string::npos);
  EXPECT_EQ(run({"kostka", "--shape", "1,2", "--weight", "1,1,1"}).code, 2);
  EXPECT_EQ(run({"kostka", "--shape", "2,1", "--weight", "1,1"}).code, 2);
  EXPECT_EQ(run({"kostka", "--shape", "2,1"}).code, 2);
}

TEST(Cli, EulerAndFtTable) {
  const auto e = Json::parse(run({"euler", "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(e["rows"].size(), 10u);
  EXPECT_TRUE(e["cc_identity"][0]["holds"].get<bool>());
  const auto f = Json::parse(run({"ft-table", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(f["rows"][1]["nontrivial_target_dim"], 4);
  EXPECT_TRUE(f["rows"][0]["nontrivial_target_dim"].is_null());
  EXPECT_EQ(run({"euler", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"ft-table", "--n", "0"}).code, 2);
}

TEST(Cli, Formats) {
  const auto tsv = run({"ft-table", "--n", "1", "--format", "tsv"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(tsv.out.substr(0, tsv.out.find('\n')), "i\torbit\tdim_L_i\tdim_F_i\tL_i_monodromy\tF_i_monodromy");
  EXPECT_EQ(run({"ft-table", "--n", "1", "--format", "xml"}).code, 2);
  const auto pretty = run({"orbits", "--n", "1", "--format", "pretty"});
  EXPECT_NE(pretty.out.find("(2,1)"), std::string::npos);
  EXPECT_EQ(run({"orbits", "--format", "json", "--n", "1"}).out, run({"--format", "json", "orbits", "--n", "1"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"orbits"}).code, 2);
  EXPECT_EQ(run({"orbits", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"orbits", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"stalks", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-max", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--n-max", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  std::vector<std::string> names;
  for (const auto& s : j["suites"]) {
    names.push_back(s["name"]);
    EXPECT_GT(s["cases"].get<long>(), 0);
  }
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(names.size(), all_suites().size());
}

TEST(Cli, VerifyReportsFirstCounterexample) {
  SuiteResult s{"demo"};
  s.check(true, [] { return std::string("a"); });
  s.check(false, [] { return std::string("b"); });
  s.check(false, [] { return std::string("c"); });
  EXPECT_EQ(s.cases, 3);
  EXPECT_EQ(s.failures, 2);
  EXPECT_EQ(*s.counterexample, "b");
}

TEST(Json, LargeIntegersAreStrings) {
  EXPECT_TRUE(integer_to_json(Integer(1) << 70).is_string());
  EXPECT_TRUE(integer_to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(integer_from_json(integer_to_json(Integer(1) << 70)), Integer(1) << 70);
  const auto p = LaurentPoly::monomial(-3, Integer(1) << 80) + LaurentPoly(7);
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}
