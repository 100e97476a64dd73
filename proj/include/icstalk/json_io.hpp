#pragma once

// JSON encodings shared by the CLI and the golden-file tests. Integers that do not fit in 64 bits
// are written as decimal strings; a LaurentPoly is [[exponent, coefficient], ...] ascending.

#include "icstalk/fano.hpp"
#include "icstalk/ic_engine.hpp"
#include "icstalk/laurent.hpp"
#include "icstalk/partition.hpp"
#include "icstalk/springer_typec.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace icstalk {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

inline Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, integer_to_json(c)}));
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly::Terms terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    terms[term[0].get<int>()] += integer_from_json(term[1]);
  }
  return LaurentPoly::from_terms(terms);
}

inline Json partition_to_json(const Partition& p) { return p.parts(); }

inline Json stalks_to_json(const StalkSolver::RankTables& t) {
  Json j;
  j["rank"] = t.stalks.rank;
  j["grading"] = kStalkGrading;
  Json f = Json::array();
  for (const auto& p : t.stalks.f) f.push_back(poly_to_json(p));
  j["f"] = std::move(f);
  Json rows = Json::array();
  for (const auto& row : t.multiplicities.entries) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(poly_to_json(p));
    rows.push_back(std::move(r));
  }
  j["t"] = std::move(rows);
  return j;
}

inline Json fano_to_json(const FanoCohomology& c) {
  Json j;
  j["n"] = c.rank;
  j["i"] = c.planes_index;
  j["complex_dim"] = c.complex_dim;
  Json dims = Json::array();
  for (const auto& d : c.l_dims) dims.push_back(integer_to_json(d));
  j["l_dims"] = std::move(dims);
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"j", t.j}, {"mult", integer_to_json(t.mult)}});
    rows.push_back({{"k", r.k}, {"degree", r.degree()}, {"terms", std::move(terms)}, {"betti", integer_to_json(r.betti)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json ft_row_to_json(const FourierTableRow& r) {
  Json j;
  j["i"] = r.i;
  j["orbit"] = partition_to_json(r.orbit.partition);
  j["trivial_target_dim"] = integer_to_json(r.trivial_target_dim);
  j["nontrivial_target_dim"] = r.nontrivial_target_dim ? integer_to_json(*r.nontrivial_target_dim) : Json(nullptr);
  j["trivial_monodromy"] = to_string(r.trivial_monodromy);
  j["nontrivial_monodromy"] = r.nontrivial_target_dim ? Json(to_string(r.nontrivial_monodromy)) : Json(nullptr);
  return j;
}

}  // namespace icstalk
