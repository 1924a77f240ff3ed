#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pairscheme/checks.hpp"
#include "pairscheme/cyclotomic.hpp"
#include "pairscheme/eigen.hpp"
#include "pairscheme/finite_field.hpp"
#include "pairscheme/scheme.hpp"

namespace pairscheme {

using Json = nlohmann::ordered_json;

/// {p, m, modulus: [ints]}; elements elsewhere are digit-index integers.
inline Json field_spec_to_json(const FieldSpec& f) {
  return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

/// {order, coeffs: ["p/q", ...]} with an optional display approximation.
/// The coefficient strings round-trip exactly.
inline Json cyclotomic_to_json(const Cyclotomic& c, bool with_approx = false) {
  Json j;
  j["order"] = c.order();
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(rational_to_string(r));
  j["coeffs"] = std::move(coeffs);
  if (with_approx) j["approx"] = c.approx(6);
  return j;
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  long n = j.at("order").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
  return Cyclotomic::from_coeffs(n, std::move(coeffs));
}

inline Json witness_to_json(const CheckWitness& w) {
  return Json{{"row", w.row}, {"col", w.col}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline Json check_report_to_json(const CheckReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.clauses) {
    Json j{{"name", c.name}, {"ok", c.ok}};
    j["witness"] = c.witness ? witness_to_json(*c.witness) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json eigenmatrix_to_json(const Eigenmatrix& p, bool with_approx = false) {
  Json j;
  j["order"] = p.order;
  j["columns"] = p.col_labels;
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json r{{"label", row.label}, {"multiplicity", row.multiplicity}};
    Json entries = Json::array();
    for (const auto& e : row.entries) entries.push_back(cyclotomic_to_json(e, with_approx));
    r["entries"] = std::move(entries);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json tensor_to_json(const IntersectionTensor& t) {
  Json out = Json::array();
  for (long i = 0; i < t.n; ++i) {
    Json ji = Json::array();
    for (long j = 0; j < t.n; ++j) {
      Json jk = Json::array();
      for (long k = 0; k < t.n; ++k) jk.push_back(t.at(i, j, k));
      ji.push_back(std::move(jk));
    }
    out.push_back(std::move(ji));
  }
  return out;
}

}  // namespace pairscheme
