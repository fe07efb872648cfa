#ifndef MAJORIZE_IO_HPP
#define MAJORIZE_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "majorize/chain.hpp"
#include "majorize/error.hpp"
#include "majorize/matrix.hpp"
#include "majorize/permutation.hpp"
#include "majorize/permutohedron.hpp"
#include "majorize/rado.hpp"
#include "majorize/vector.hpp"

namespace majorize::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const RVector& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(to_string(c));
  return arr;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError("expected a rational string like \"p/q\", got " + j.dump());
}

inline RVector vector_from_json(const Json& j) {
  require(j.is_array(), "expected a JSON array of rationals, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RVector(std::move(c));
}

/// Parses '["7","3"]' or '["1/2","1/3"]'.
inline RVector parse_vector(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), "malformed JSON vector: " + std::string(text));
  return vector_from_json(j);
}

inline Json to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "expected a square matrix of rationals");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    require(r.is_array(), "matrix rows must be arrays");
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_from_json(e));
    rows.push_back(std::move(row));
  }
  return RMatrix(std::move(rows));
}

/// {"n":4,"cycles":"(1,2)"}
inline Json to_json(const Permutation& p) { return Json{{"n", p.degree()}, {"cycles", p.to_cycle_string()}}; }

inline Permutation permutation_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("cycles"), "permutation must be {\"n\":..,\"cycles\":..}");
  return Permutation::parse_cycles(j.at("cycles").get<std::string>(), j.at("n").get<std::size_t>());
}

inline Json to_json(const TransferStep& s) {
  return Json{{"j", s.j + 1},          {"k", s.k + 1},           {"rho", to_string(s.rho)},
              {"delta", to_string(s.delta)}, {"Delta", to_string(s.Delta)}, {"lambda", to_string(s.lambda)}};
}

inline Json to_json(const MajorizationChain& c) {
  Json vectors = Json::array();
  for (const auto& v : c.vectors) vectors.push_back(to_json(v));
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  return Json{{"vectors", vectors}, {"steps", steps}};
}

inline MajorizationChain chain_from_json(const Json& j) {
  MajorizationChain c;
  for (const auto& v : j.at("vectors")) c.vectors.push_back(vector_from_json(v));
  for (const auto& s : j.at("steps")) {
    auto j1 = s.at("j").get<std::size_t>();
    auto k1 = s.at("k").get<std::size_t>();
    require(j1 >= 1 && k1 >= 1, "step indices are 1-based");
    c.steps.push_back({j1 - 1, k1 - 1, rational_from_json(s.at("rho")), rational_from_json(s.at("Delta")),
                       rational_from_json(s.at("delta")), rational_from_json(s.at("lambda"))});
  }
  return c;
}

inline Json to_json(const BirkhoffDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(Json{{"weight", to_string(t.weight)}, {"sigma", t.sigma.to_cycle_string()}});
  return terms;
}

inline BirkhoffDecomposition birkhoff_from_json(const Json& j, std::size_t n) {
  BirkhoffDecomposition d;
  for (const auto& t : j)
    d.terms.push_back({rational_from_json(t.at("weight")), Permutation::parse_cycles(t.at("sigma").get<std::string>(), n)});
  return d;
}

/// {"e":"1/2","(1,2)":"1/2"}
inline Json to_json(const MembershipCertificate& m) {
  Json w = Json::object();
  for (const auto& [gamma, t] : m.weights) w[gamma.to_cycle_string()] = to_string(t);
  return w;
}

inline MembershipCertificate membership_from_json(const Json& j, std::size_t n) {
  require(j.is_object(), "weights must be an object keyed by cycle strings");
  MembershipCertificate m;
  for (const auto& [key, value] : j.items()) m.weights.emplace_back(Permutation::parse_cycles(key, n), rational_from_json(value));
  return m;
}

inline Json to_json(const SeparationCertificate& s) {
  return Json{{"u", to_json(s.u)}, {"c", to_string(s.c)}, {"margin", to_string(s.margin)}};
}

inline SeparationCertificate separation_from_json(const Json& j) {
  return {vector_from_json(j.at("u")), rational_from_json(j.at("c")), rational_from_json(j.at("margin"))};
}

inline Json to_json(const MeanValue& v) { return v.str(); }

}  // namespace majorize::io

#endif  // MAJORIZE_IO_HPP
