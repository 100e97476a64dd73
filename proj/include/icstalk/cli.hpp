#pragma once

// Command-line front end. run_cli is the whole program; tools/icstalk.cpp only forwards argv.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "icstalk/fano.hpp"
#include "icstalk/ic_engine.hpp"
#include "icstalk/json_io.hpp"
#include "icstalk/partition.hpp"
#include "icstalk/springer_typec.hpp"
#include "icstalk/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace icstalk::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

enum class OutputFormat { Json, Tsv, Pretty };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A rendered result: the JSON document and a tabular view for tsv/pretty.
struct Report {
  Json json;
  Table table;
  std::vector<std::string> preamble;  // pretty only
  bool pretty_table = true;
  int exit_code = kOk;
};

inline void render_tsv(const Table& t, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "\t" : "") << cells[c];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

inline void render_pretty(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

inline void render(const Report& r, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::Json: out << r.json.dump(2) << '\n'; break;
    case OutputFormat::Tsv: render_tsv(r.table, out); break;
    case OutputFormat::Pretty:
      for (const auto& l : r.preamble) out << l << '\n';
      if (!r.pretty_table) break;
      if (!r.preamble.empty()) out << '\n';
      render_pretty(r.table, out);
      break;
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

// Commands ---------------------------------------------------------------------

inline Report cmd_orbits(int n) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  Report r;
  r.json["n"] = n;
  r.json["orbits"] = Json::array();
  r.table.header = {"partition", "dim", "codim", "has_gaps", "richardson", "relevant_full", "ft_support", "reason"};
  for (const auto& p : partitions_of(2 * n + 1)) {
    const OrbitLabel o(n, p);
    const bool rich = is_richardson(p);
    const auto ft = ft_support(o, LocalSystem::Trivial);
    Json row;
    row["partition"] = partition_to_json(p);
    row["dim"] = orbit_dim(o);
    row["codim"] = orbit_codim(o);
    row["has_gaps"] = has_gaps(p);
    row["is_richardson"] = rich;
    row["richardson_label"] = rich ? partition_to_json(richardson_label(p)) : Json(nullptr);
    row["is_relevant_full"] = is_relevant_full(p);
    row["ft_support"] = to_string(ft.flag);
    row["ft_reason"] = ft.reason;
    r.json["orbits"].push_back(std::move(row));
    r.table.rows.push_back({paren(p), std::to_string(orbit_dim(o)), std::to_string(orbit_codim(o)), yes_no(has_gaps(p)),
                            yes_no(rich), yes_no(is_relevant_full(p)), to_string(ft.flag), ft.reason});
  }
  r.preamble = {"K-orbits in g_1 for n=" + std::to_string(n) + " (partitions of " + std::to_string(2 * n + 1) + ")"};
  return r;
}

inline Report cmd_stalks(int n, bool check) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  StalkSolver solver;
  const auto& t = solver.solve(n);
  Report r;
  r.json = stalks_to_json(t);
  r.table.header = {"table", "i", "j", "poly"};
  for (int i = 0; i <= n; ++i) {
    const auto& f = t.stalks.f[static_cast<std::size_t>(i)];
    r.table.rows.push_back({"f", std::to_string(i), "", f.to_string()});
    r.preamble.push_back("f_" + std::to_string(i) + " = " + f.to_string());
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& p = t.multiplicities.at(i, j);
      r.table.rows.push_back({"T", std::to_string(i), std::to_string(j), p.to_string()});
      r.preamble.push_back("T^" + std::to_string(i) + "_" + std::to_string(j) + " = " + p.to_string());
    }
  if (check) {
    std::vector<std::string> mismatches;
    for (int i = 0; i <= n; ++i) {
      if (t.stalks.f[static_cast<std::size_t>(i)] != closed_form_f(n, i)) mismatches.push_back("f_" + std::to_string(i));
      for (int j = 0; j <= i; ++j)
        if (t.multiplicities.at(i, j) != closed_form_t(n, i, j))
          mismatches.push_back("T^" + std::to_string(i) + "_" + std::to_string(j));
    }
    r.json["check"] = {{"passed", mismatches.empty()}, {"mismatches", mismatches}};
    r.preamble.push_back(mismatches.empty() ? "check: solver agrees with closed forms"
                                            : "check: MISMATCH at " + mismatches.front());
    if (!mismatches.empty()) r.exit_code = kVerificationFailed;
  }
  r.pretty_table = false;
  return r;
}

inline Report cmd_fano(int n, int i) {
  const auto c = fano_multiplicities(n, i);
  Report r;
  r.json = fano_to_json(c);
  r.table.header = {"k", "degree", "decomposition", "betti"};
  for (const auto& row : c.rows) {
    std::string dec;
    for (const auto& t : row.terms) {
      if (!dec.empty()) dec += " + ";
      dec += "L_" + std::to_string(t.j) + (t.mult == 1 ? std::string() : "^" + t.mult.str());
    }
    r.table.rows.push_back({std::to_string(row.k), std::to_string(row.degree()), dec.empty() ? "0" : dec, row.betti.str()});
  }
  r.preamble.push_back("Fano_" + std::to_string(i - 1) + "^" + std::to_string(2 * n) +
                       ": complex dimension " + std::to_string(c.complex_dim));
  for (const auto& row : c.rows) r.preamble.push_back("b_" + std::to_string(row.degree()) + " = " + row.betti.str());
  return r;
}

inline Report cmd_kostka(const std::string& shape_text, const std::string& weight_text) {
  const auto shape = Partition::parse(shape_text);
  const auto weight = Partition::parse(weight_text);
  const auto k = kostka(shape, weight);
  Report r;
  r.json["shape"] = partition_to_json(shape);
  r.json["weight"] = partition_to_json(weight);
  r.json["kostka"] = k;
  r.table.header = {"shape", "weight", "kostka"};
  r.table.rows.push_back({paren(shape), paren(weight), std::to_string(k)});
  r.preamble.push_back("K_{" + paren(shape) + "," + paren(weight) + "} = " + std::to_string(k));
  r.pretty_table = false;
  return r;
}

inline Report cmd_euler(int n) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  Report r;
  r.json["n"] = n;
  r.json["rows"] = Json::array();
  r.table.header = {"i", "j", "chi_trivial", "chi_nontrivial"};
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto triv = euler_chi_trivial(n, i, j);
      const bool has_nontrivial = i % 2 == 0 && i >= 2;
      Json row{{"i", i}, {"j", j}, {"chi_trivial", integer_to_json(triv)}};
      row["chi_nontrivial"] = has_nontrivial ? integer_to_json(euler_chi_nontrivial(n, i, j)) : Json(nullptr);
      r.json["rows"].push_back(std::move(row));
      r.table.rows.push_back({std::to_string(i), std::to_string(j), triv.str(),
                              has_nontrivial ? euler_chi_nontrivial(n, i, j).str() : "-"});
    }
  r.json["cc_identity"] = Json::array();
  bool all = true;
  for (int i = 2; i <= n; i += 2) {
    const bool ok = verify_cc_identity(n, i);
    all = all && ok;
    r.json["cc_identity"].push_back({{"i", i}, {"holds", ok}});
  }
  r.preamble.push_back("Euler characteristics of order-two IC sheaves, n=" + std::to_string(n));
  r.preamble.push_back(std::string("characteristic-cycle identity: ") + (all ? "holds" : "FAILS"));
  if (!all) r.exit_code = kVerificationFailed;
  return r;
}

inline Report cmd_ft_table(int n) {
  Report r;
  r.json["n"] = n;
  r.json["rows"] = Json::array();
  r.table.header = {"i", "orbit", "dim_L_i", "dim_F_i", "L_i_monodromy", "F_i_monodromy"};
  for (const auto& row : ft_table(n)) {
    r.json["rows"].push_back(ft_row_to_json(row));
    r.table.rows.push_back({std::to_string(row.i), paren(row.orbit.partition), row.trivial_target_dim.str(),
                            row.nontrivial_target_dim ? row.nontrivial_target_dim->str() : "-",
                            to_string(row.trivial_monodromy),
                            row.nontrivial_target_dim ? to_string(row.nontrivial_monodromy) : "-"});
  }
  return r;
}

inline Report cmd_verify(int n_max) {
  const auto results = run_all_suites(n_max);
  Report r;
  r.json["n_max"] = n_max;
  r.json["suites"] = Json::array();
  r.table.header = {"suite", "cases", "failures", "status"};
  bool all = true;
  for (const auto& s : results) {
    all = all && s.passed();
    r.json["suites"].push_back({{"name", s.name},
                                {"cases", s.cases},
                                {"failures", s.failures},
                                {"passed", s.passed()},
                                {"counterexample", s.counterexample ? Json(*s.counterexample) : Json(nullptr)}});
    r.table.rows.push_back({s.name, std::to_string(s.cases), std::to_string(s.failures), s.passed() ? "ok" : "FAIL"});
  }
  r.json["passed"] = all;
  if (!all) {
    r.exit_code = kVerificationFailed;
    for (const auto& s : results)
      if (!s.passed()) {
        r.preamble.push_back("first counterexample: " + s.name + ": " + *s.counterexample);
        break;
      }
  }
  return r;
}

// Entry point ------------------------------------------------------------------

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tables for order-two orbits of (SL(2n+1), SO(2n+1))", "icstalk"};
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::Pretty;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"tsv", OutputFormat::Tsv}, {"pretty", OutputFormat::Pretty}};
  app.add_option("--format", format, "json, tsv or pretty")->transform(CLI::CheckedTransformer(formats))->capture_default_str();

  int n = 0, i = 0, n_max = 0;
  bool check = false;
  std::string shape, weight;

  auto* orbits = app.add_subcommand("orbits", "K-orbits with dimensions and classification flags");
  orbits->add_option("--n", n, "rank")->required();
  auto* stalks = app.add_subcommand("stalks", "stalk polynomials f_i and multiplicities T^i_j");
  stalks->add_option("--n", n, "rank")->required();
  stalks->add_flag("--check", check, "compare with the closed forms; exit 1 on mismatch");
  auto* fano = app.add_subcommand("fano", "cohomology of Fano_{i-1}^{2n}");
  fano->add_option("--n", n, "rank")->required();
  fano->add_option("--i", i, "plane index, 1 <= i <= n")->required();
  auto* kost = app.add_subcommand("kostka", "Kostka number by tableau enumeration");
  kost->add_option("--shape", shape, "descending parts, e.g. 2,1")->required();
  kost->add_option("--weight", weight, "descending parts, e.g. 1,1,1")->required();
  auto* euler = app.add_subcommand("euler", "Euler characteristics of order-two IC sheaves");
  euler->add_option("--n", n, "rank")->required();
  auto* ft = app.add_subcommand("ft-table", "Fourier transform matching for order-two orbits");
  ft->add_option("--n", n, "rank")->required();
  auto* verify = app.add_subcommand("verify", "run every identity suite up to a rank");
  verify->add_option("--n-max", n_max, "maximal rank")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report r;
    if (*orbits) r = cmd_orbits(n);
    else if (*stalks) r = cmd_stalks(n, check);
    else if (*fano) r = cmd_fano(n, i);
    else if (*kost) r = cmd_kostka(shape, weight);
    else if (*euler) r = cmd_euler(n);
    else if (*ft) r = cmd_ft_table(n);
    else r = cmd_verify(n_max);
    render(r, format, out);
    return r.exit_code;
  } catch (const InconsistentRecursion& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace icstalk::cli
