// JSON forms of ideals, series, verdicts, polynomials and results.
//
//   ideal       {"n": n, "gens": [[e1,...,en], ...]}   gens descending lex
//   series      {"coeffs": [c0, ..., cD]}
//   verdict     {"property": name, "holds": bool, "witness": {"member": [...], "missing": [...]}}
//   polynomial  [["coef", [e1,...,en]], ...]          coef decimal or p/q
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "gin/error.hpp"
#include "gin/generic.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"
#include "gin/properties.hpp"

namespace gin {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Monomial& m) {
  Json a = Json::array();
  for (auto e : m.exponents()) a.push_back(e);
  return a;
}

inline Monomial monomial_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("exponent vector must be an array of length " + std::to_string(n));
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0)
      throw ParseError("exponents must be non-negative integers");
    m.set(i, j[i].get<unsigned>());
  }
  return m;
}

inline Json to_json(const MonomialIdeal& J) {
  Json gens = Json::array();
  for (const auto& g : J.generators()) gens.push_back(to_json(g));
  return Json{{"n", J.nvars()}, {"gens", gens}};
}

inline MonomialIdeal monomial_ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) throw ParseError("ideal JSON needs \"n\" and \"gens\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1 ||
      j["n"].get<std::int64_t>() > static_cast<std::int64_t>(kMaxVariables))
    throw ParseError("\"n\" must be an integer in [1, " + std::to_string(kMaxVariables) + "]");
  if (!j["gens"].is_array()) throw ParseError("\"gens\" must be an array");
  auto n = j["n"].get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) gens.push_back(monomial_from_json(g, n));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

inline Json to_json(const SeriesWindow& w) { return Json{{"coeffs", w.coeffs}}; }

inline SeriesWindow series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("series JSON needs \"coeffs\"");
  SeriesWindow w;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_number_integer()) throw ParseError("series coefficients must be integers");
    w.coeffs.push_back(c.get<std::int64_t>());
  }
  if (w.coeffs.empty()) throw ParseError("series must have at least one coefficient");
  return w;
}

inline Json to_json(const std::string& property, const PropertyVerdict& v) {
  Json j{{"property", property}, {"holds", v.holds}};
  if (v.witness) j["witness"] = Json{{"member", to_json(v.witness->member)}, {"missing", to_json(v.witness->missing)}};
  return j;
}

template <class F>
Json to_json(const Polynomial<F>& f) {
  Json a = Json::array();
  for (const auto& t : f.terms()) a.push_back(Json::array({t.coef.str(), to_json(t.mono)}));
  return a;
}

template <class F>
Polynomial<F> polynomial_from_json(const Json& j, RingPtr ring, MonomialOrder order) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of [coefficient, exponents]");
  std::vector<Term<F>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) throw ParseError("term must be [\"coefficient\", [exponents]]");
    terms.push_back({F::parse(t[0].get<std::string>()), monomial_from_json(t[1], ring->nvars())});
  }
  return Polynomial<F>::from_terms(std::move(ring), std::move(order), std::move(terms));
}

inline Json to_json(const GinResult& r) {
  Json u = Json::array();
  for (auto g : r.u_generic) u.push_back(to_string(g));
  return Json{{"schema", kSchemaVersion},
              {"n", r.n},
              {"s", r.degrees.size()},
              {"degrees", r.degrees},
              {"order", r.order},
              {"route", to_string(r.route)},
              {"ideal", to_json(r.ideal)},
              {"seeds", r.seeds},
              {"agreement", r.agreement},
              {"u_generic", u},
              {"field", r.field}};
}

}  // namespace gin
