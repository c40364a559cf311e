// Monomial orders: lex, deglex, degrevlex and inverse block orders.
//
// Variables are ranked x_1 > x_2 > ... > x_n by index. An inverse block order
// splits the variables into main variables and parameters and compares the
// main parts first; the parameter parts only break ties.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gin/error.hpp"
#include "gin/monomial.hpp"
#include "gin/primes.hpp"

namespace gin {

enum class OrderKind : std::uint8_t { lex, deglex, degrevlex, inverse_block };

inline std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::inverse_block: return "inverse-block";
  }
  return "?";
}

inline std::optional<OrderKind> parse_order_kind(std::string_view s) {
  if (s == "lex") return OrderKind::lex;
  if (s == "deglex") return OrderKind::deglex;
  if (s == "degrevlex" || s == "grevlex") return OrderKind::degrevlex;
  return std::nullopt;
}

namespace detail {

// Compares the exponents at `idx` (in rank order) under a non-block kind.
inline std::strong_ordering compare_on(OrderKind kind, const Monomial& a, const Monomial& b,
                                       std::span<const std::uint8_t> idx) {
  if (kind != OrderKind::lex) {
    unsigned da = 0, db = 0;
    for (auto i : idx) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::degrevlex) {
    for (std::size_t k = idx.size(); k-- > 0;) {
      auto ea = a[idx[k]], eb = b[idx[k]];
      if (ea != eb) return eb <=> ea;
    }
    return std::strong_ordering::equal;
  }
  for (auto i : idx) {
    auto ea = a[i], eb = b[i];
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_full(OrderKind kind, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  if (kind != OrderKind::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (kind == OrderKind::degrevlex) {
    for (std::size_t k = n; k-- > 0;)
      if (a[k] != b[k]) return b[k] <=> a[k];
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return a[k] <=> b[k];
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Total, multiplicative monomial order on a ring with a fixed variable count.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder lex(std::size_t n) { return MonomialOrder(OrderKind::lex, n); }
  static MonomialOrder deglex(std::size_t n) { return MonomialOrder(OrderKind::deglex, n); }
  static MonomialOrder degrevlex(std::size_t n) { return MonomialOrder(OrderKind::degrevlex, n); }
  static MonomialOrder of_kind(OrderKind kind, std::size_t n) {
    if (kind == OrderKind::inverse_block)
      throw std::invalid_argument("inverse-block order needs a variable partition");
    return MonomialOrder(kind, n);
  }

  /// Main variables are compared under `main`; the rest (parameters) under
  /// `param` only when the main parts coincide.
  static MonomialOrder inverse_block(std::size_t n, const std::vector<std::size_t>& main_vars,
                                     OrderKind main, OrderKind param) {
    if (main == OrderKind::inverse_block || param == OrderKind::inverse_block)
      throw std::invalid_argument("inverse-block sub-orders must be plain orders");
    MonomialOrder o(OrderKind::inverse_block, n);
    o.main_kind_ = main;
    o.param_kind_ = param;
    std::vector<bool> is_main(n, false);
    for (auto v : main_vars) {
      if (v >= n) throw DimensionMismatch("main variable index out of range");
      is_main[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      (is_main[i] ? o.main_ : o.param_).push_back(static_cast<std::uint8_t>(i));
    return o;
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return n_; }
  bool is_block() const { return kind_ == OrderKind::inverse_block; }
  /// Kind used on main variables (the kind itself for plain orders).
  OrderKind main_kind() const { return is_block() ? main_kind_ : kind_; }
  OrderKind param_kind() const { return param_kind_; }
  std::span<const std::uint8_t> main_indices() const { return main_; }
  std::span<const std::uint8_t> param_indices() const { return param_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != n_ || b.size() != n_)
      throw DimensionMismatch("monomial variable count does not match the order");
    return compare_unchecked(a, b);
  }

  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::inverse_block) return detail::compare_full(kind_, a, b);
    auto c = detail::compare_on(main_kind_, a, b, main_);
    if (c != 0) return c;
    return detail::compare_on(param_kind_, a, b, param_);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare_unchecked(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare_unchecked(a, b) > 0; }

  std::string name() const {
    if (!is_block()) return std::string(to_string(kind_));
    return "inverse-block(" + std::string(to_string(main_kind_)) + ";" +
           std::string(to_string(param_kind_)) + ")";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.main_kind_ == b.main_kind_ &&
           a.param_kind_ == b.param_kind_ && a.main_ == b.main_;
  }

 private:
  MonomialOrder(OrderKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n > kMaxVariables) throw std::invalid_argument("too many variables");
  }

  OrderKind kind_ = OrderKind::lex;
  std::size_t n_ = 0;
  OrderKind main_kind_ = OrderKind::lex;
  OrderKind param_kind_ = OrderKind::lex;
  std::vector<std::uint8_t> main_;
  std::vector<std::uint8_t> param_;
};

/// Three-way comparison of m1 and m2 under `ord`.
inline std::strong_ordering cmp_monomials(const Monomial& m1, const Monomial& m2,
                                          const MonomialOrder& ord) {
  return ord.compare(m1, m2);
}

/// s <=_p t, i.e. binom(t, s) is nonzero modulo p; plain s <= t when p = 0.
/// Lucas: binom(t, s) mod p is nonzero iff every base-p digit of s is at most
/// the matching digit of t.
inline bool binom_p_leq(std::uint64_t s, std::uint64_t t, std::uint64_t p) {
  if (p == 0) return s <= t;
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime, got " + std::to_string(p));
  while (s != 0 || t != 0) {
    if (s % p > t % p) return false;
    s /= p;
    t /= p;
  }
  return true;
}

}  // namespace gin
