// Sparse multivariate polynomials over an exact field.
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gin/error.hpp"
#include "gin/field.hpp"
#include "gin/monomial.hpp"
#include "gin/order.hpp"

namespace gin {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable names plus an optional split into main variables and parameters.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<bool> parameter)
      : names_(std::move(names)), parameter_(std::move(parameter)) {
    if (names_.size() > kMaxVariables) throw std::invalid_argument("too many variables");
    if (parameter_.size() != names_.size()) throw std::invalid_argument("partition size mismatch");
    for (std::size_t i = 0; i < names_.size(); ++i)
      (parameter_[i] ? params_ : main_).push_back(i);
  }

  static RingPtr make(std::vector<std::string> names) {
    std::vector<bool> p(names.size(), false);
    return std::make_shared<const Ring>(std::move(names), std::move(p));
  }

  /// x1..xn.
  static RingPtr standard(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make(std::move(names));
  }

  /// Main variables first, then parameters.
  static RingPtr make_parametric(std::vector<std::string> main, std::vector<std::string> params) {
    std::vector<bool> p(main.size(), false);
    p.resize(main.size() + params.size(), true);
    main.insert(main.end(), params.begin(), params.end());
    return std::make_shared<const Ring>(std::move(main), std::move(p));
  }

  std::size_t nvars() const { return names_.size(); }
  std::span<const std::string> names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool is_parameter(std::size_t i) const { return parameter_[i]; }
  bool has_parameters() const { return !params_.empty(); }
  std::span<const std::size_t> main_indices() const { return main_; }
  std::span<const std::size_t> parameter_indices() const { return params_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  RingPtr main_ring() const { return sub_ring(main_); }
  RingPtr parameter_ring() const { return sub_ring(params_); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.parameter_ == b.parameter_;
  }

 private:
  RingPtr sub_ring(std::span<const std::size_t> idx) const {
    std::vector<std::string> names;
    for (auto i : idx) names.push_back(names_[i]);
    return make(std::move(names));
  }

  std::vector<std::string> names_;
  std::vector<bool> parameter_;
  std::vector<std::size_t> main_;
  std::vector<std::size_t> params_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Restriction of `m` to the variables at `idx`, in that order.
template <class Index>
Monomial project(const Monomial& m, std::span<const Index> idx) {
  Monomial r(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r.set(k, m[idx[k]]);
  return r;
}

template <class F>
struct Term {
  F coef;
  Monomial mono;
};

/// Terms kept strictly descending under the polynomial's active order, with no
/// zero coefficients and no repeated monomials. Zero is the empty term list.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using TermType = Term<F>;

  Polynomial() = default;
  Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
    if (order_.nvars() != ring_->nvars()) throw DimensionMismatch("order and ring variable counts differ");
  }

  /// Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring), std::move(order));
    for (const auto& t : terms)
      if (t.mono.size() != p.ring_->nvars()) throw DimensionMismatch("term variable count differs from ring");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  /// Terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, MonomialOrder order, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring), std::move(order));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr ring, MonomialOrder order, const F& c) {
    return monomial(std::move(ring), std::move(order), c, Monomial(order.nvars()));
  }

  static Polynomial monomial(RingPtr ring, MonomialOrder order, const F& c, const Monomial& m) {
    Polynomial p(std::move(ring), std::move(order));
    if (m.size() != p.ring_->nvars()) throw DimensionMismatch("monomial variable count differs from ring");
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
  }

  static Polynomial variable(RingPtr ring, MonomialOrder order, std::size_t i) {
    auto n = ring->nvars();
    return monomial(std::move(ring), std::move(order), F(1), Monomial::variable(n, i));
  }

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Term<F>> terms() const { return terms_; }
  std::vector<Term<F>>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term<F>& lead_term() const {
    if (is_zero()) throw std::domain_error("lead term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead_term().mono; }
  const F& lead_coefficient() const { return lead_term().coef; }

  /// Same polynomial with terms re-sorted under `ord`.
  Polynomial with_order(const MonomialOrder& ord) const {
    if (ord == order_) return *this;
    Polynomial p(ring_, ord);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.greater(a.mono, b.mono); });
    return p;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term<F>& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  /// Largest total degree of a term, 0 for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.combine(g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.combine(g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    const Polynomial& h = g.order_ == f.order_ ? g : g.with_order(f.order_);
    std::vector<Term<F>> prod;
    prod.reserve(f.size() * h.size());
    for (const auto& a : f.terms_)
      for (const auto& b : h.terms_) prod.push_back({a.coef * b.coef, a.mono * b.mono});
    return from_terms(f.ring_, f.order_, std::move(prod));
  }

  friend Polynomial operator*(const Polynomial& f, const F& c) { return f.scaled(c); }
  friend Polynomial operator*(const F& c, const Polynomial& f) { return f.scaled(c); }

  Polynomial scaled(const F& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  /// c * m * this; multiplicativity keeps the terms sorted.
  Polynomial mul_term(const F& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial p(ring_, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coef * c, t.mono * m});
    return p;
  }

  /// Divides by the lead coefficient.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coefficient().inverse());
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_) || f.size() != g.size()) return false;
    const Polynomial& h = g.order_ == f.order_ ? g : g.with_order(f.order_);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!(f.terms_[i].mono == h.terms_[i].mono) || !(f.terms_[i].coef == h.terms_[i].coef)) return false;
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string c = t.coef.str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (t.mono.is_one())
        out += c;
      else if (c == "1")
        out += t.mono.to_string(ring_->names());
      else
        out += c + "*" + t.mono.to_string(ring_->names());
    }
    return out;
  }

  void check_ring(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) throw RingMismatch("polynomials belong to different rings");
  }

 private:
  void normalize() {
    const auto& ord = order_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coef += t.coef;
      else
        out.push_back(std::move(t));
      if (out.size() >= 2 && out[out.size() - 2].coef.is_zero()) out.erase(out.end() - 2);
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& g0, bool subtract) const {
    check_ring(g0);
    const Polynomial& g = g0.order_ == order_ ? g0 : g0.with_order(order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < size() || j < g.size()) {
      if (j == g.size() || (i < size() && order_.greater(terms_[i].mono, g.terms_[j].mono))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == size() || order_.less(terms_[i].mono, g.terms_[j].mono)) {
        r.terms_.push_back(g.terms_[j++]);
        if (subtract) r.terms_.back().coef = -r.terms_.back().coef;
      } else {
        F c = subtract ? terms_[i].coef - g.terms_[j].coef : terms_[i].coef + g.terms_[j].coef;
        if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_ = Ring::make({});
  MonomialOrder order_;
  std::vector<Term<F>> terms_;
};

template <class F>
F power(F base, unsigned e) {
  F r(1);
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

/// Values for parameter variables, keyed by their index in the ring.
template <class F>
using ParameterPoint = std::map<std::size_t, F>;

/// Assigns `values` to the ring's parameters in declaration order.
template <class F>
ParameterPoint<F> point_on_parameters(const Ring& ring, const std::vector<F>& values) {
  auto params = ring.parameter_indices();
  if (values.size() != params.size())
    throw std::invalid_argument("point has " + std::to_string(values.size()) + " coordinates, ring has " +
                                std::to_string(params.size()) + " parameters");
  ParameterPoint<F> pt;
  for (std::size_t k = 0; k < params.size(); ++k) pt.emplace(params[k], values[k]);
  return pt;
}

/// Order on the main variables induced by `ord`.
inline MonomialOrder restricted_main_order(const MonomialOrder& ord, std::size_t nmain) {
  return MonomialOrder::of_kind(ord.main_kind(), nmain);
}

/// Substitutes the point for the parameters and collects like main-variable
/// monomials. The result lives in the main-variable ring under `main_order`.
template <class F>
Polynomial<F> specialize(const Polynomial<F>& f, const ParameterPoint<F>& point,
                         std::optional<MonomialOrder> main_order = std::nullopt) {
  const Ring& ring = f.ring();
  auto target_ring = ring.main_ring();
  MonomialOrder ord = main_order ? *main_order : restricted_main_order(f.order(), target_ring->nvars());
  auto main = ring.main_indices();
  auto params = ring.parameter_indices();
  std::vector<Term<F>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    F c = t.coef;
    for (auto i : params) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      auto it = point.find(i);
      if (it == point.end()) throw std::invalid_argument("parameter " + ring.name(i) + " has no assigned value");
      c *= power(it->second, e);
    }
    if (!c.is_zero()) out.push_back({std::move(c), project(t.mono, main)});
  }
  return Polynomial<F>::from_terms(std::move(target_ring), std::move(ord), std::move(out));
}

/// Leading main-variable monomial and its full parameter coefficient, viewing
/// f as a polynomial in the main variables over k[parameters].
template <class F>
struct BlockLeadingData {
  Monomial lead_monomial;
  Polynomial<F> lead_coefficient;
};

template <class F>
BlockLeadingData<F> block_leading_data(const Polynomial<F>& f, OrderKind main_kind,
                                       OrderKind param_kind = OrderKind::degrevlex) {
  if (f.is_zero()) throw std::domain_error("block leading data of the zero polynomial");
  const Ring& ring = f.ring();
  auto main = ring.main_indices();
  auto params = ring.parameter_indices();
  auto main_ord = MonomialOrder::of_kind(main_kind, main.size());
  std::optional<Monomial> best;
  for (const auto& t : f.terms()) {
    Monomial v = project(t.mono, main);
    if (!best || main_ord.greater(v, *best)) best = v;
  }
  std::vector<Term<F>> coef;
  for (const auto& t : f.terms())
    if (project(t.mono, main) == *best) coef.push_back({t.coef, project(t.mono, params)});
  auto pring = ring.parameter_ring();
  auto pord = MonomialOrder::of_kind(param_kind, params.size());
  return {*best, Polynomial<F>::from_terms(std::move(pring), std::move(pord), std::move(coef))};
}

/// Parses text such as "3*x1^2 - x1*x2 + 7/2*x3". Unknown names are errors.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, RingPtr ring, MonomialOrder order) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term<F>> terms;
  std::size_t pos = 0;
  const std::size_t n = ring->nvars();
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      if (s[end] == '^') {  // exponents are unsigned; skip the digits
        ++end;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      } else {
        ++end;
      }
    }
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    F coef(1);
    Monomial mono(n);
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      auto star = term.find('*', fpos);
      std::string_view factor = term.substr(fpos, star == std::string_view::npos ? std::string_view::npos : star - fpos);
      if (factor.empty()) throw ParseError("empty factor in '" + std::string(term) + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coef *= F::parse(factor);
      } else {
        auto caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        auto idx = ring->index_of(name);
        if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        if (caret != std::string_view::npos) {
          auto digits = factor.substr(caret + 1);
          if (digits.empty()) throw ParseError("missing exponent in '" + std::string(factor) + "'");
          e = 0;
          for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad exponent in '" + std::string(factor) + "'");
            e = e * 10 + static_cast<unsigned>(c - '0');
            if (e > 10000) throw ParseError("exponent too large");
          }
        }
        mono.set(*idx, mono[*idx] + e);
      }
      if (star == std::string_view::npos) break;
      fpos = star + 1;
    }
    terms.push_back({neg ? -coef : coef, mono});
    pos = end;
  }
  return Polynomial<F>::from_terms(std::move(ring), std::move(order), std::move(terms));
}

}  // namespace gin
