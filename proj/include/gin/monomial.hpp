// Exponent vectors over a fixed set of variables.
#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

#include "gin/error.hpp"

namespace gin {

inline constexpr std::size_t kMaxVariables = 32;

/// A monomial x_1^e_1 ... x_n^e_n with n <= kMaxVariables. Variable x_1 is
/// index 0. The degree and the support bitmask are cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n) : n_(checked_size(n)) {}

  Monomial(std::initializer_list<unsigned> exps) : n_(checked_size(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  template <class Int>
  static Monomial from_exponents(std::span<const Int> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      m.set(i, static_cast<unsigned>(exps[i]));
    }
    return m;
  }
  template <class Int>
  static Monomial from_exponents(const std::vector<Int>& exps) {
    return from_exponents(std::span<const Int>(exps));
  }

  /// x_i in n variables.
  static Monomial variable(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.set(i, 1);
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::uint32_t support() const { return support_; }

  Exponent operator[](std::size_t i) const {
    assert(i < n_);
    return e_[i];
  }

  void set(std::size_t i, unsigned e) {
    assert(i < n_);
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    degree_ = degree_ - e_[i] + e;
    e_[i] = static_cast<Exponent>(e);
    if (e != 0)
      support_ |= (1u << i);
    else
      support_ &= ~(1u << i);
  }

  std::span<const Exponent> exponents() const { return {e_.data(), n_}; }
  std::vector<unsigned> to_vector() const { return {e_.begin(), e_.begin() + n_}; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    assert(n_ == other.n_);
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.n_ == b.n_);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      unsigned e = unsigned{a.e_[i]} + b.e_[i];
      if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
      r.e_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// Quotient assuming `b` divides `a`.
  static Monomial exact_quotient(const Monomial& a, const Monomial& b) {
    assert(b.divides(a));
    Monomial r(a.n_);
    std::uint32_t supp = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
      if (r.e_[i] != 0) supp |= (1u << i);
    }
    r.degree_ = a.degree_ - b.degree_;
    r.support_ = supp;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.n_ == b.n_);
    Monomial r(a.n_);
    unsigned deg = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      deg += r.e_[i];
    }
    r.degree_ = deg;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.support_ == b.support_ && a.degree_ == b.degree_ &&
           std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

  /// Renders as x1^2*x3 using the given names, or "1" for the unit.
  std::string to_string(std::span<const std::string> names = {}) const {
    if (degree_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVariables)
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVariables> e_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// m1 / m2 when m2 divides m1, nullopt otherwise.
inline std::optional<Monomial> monomial_quotient(const Monomial& m1, const Monomial& m2) {
  if (m1.size() != m2.size()) throw DimensionMismatch("monomial_quotient: variable counts differ");
  if (!m2.divides(m1)) return std::nullopt;
  return Monomial::exact_quotient(m1, m2);
}

/// Calls `visit` on every degree-d monomial in n variables in descending lex
/// order, stopping early when it returns false. Nothing is materialized.
template <class Visitor>
void for_each_monomial_desc_lex(std::size_t n, unsigned d, Visitor&& visit) {
  if (n == 0) {
    if (d == 0) visit(Monomial(0));
    return;
  }
  Monomial m(n);
  m.set(0, d);
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor, const Monomial&>, bool>) {
      if (!visit(static_cast<const Monomial&>(m))) return;
    } else {
      visit(static_cast<const Monomial&>(m));
    }
    // Successor: the rightmost position before the last with a positive
    // exponent gives one unit to its right neighbour, which also absorbs the
    // last exponent.
    unsigned tail = m[n - 1];
    std::size_t i = n - 1;
    while (i > 0 && m[i - 1] == 0) --i;
    if (i == 0) return;
    --i;
    m.set(i, m[i] - 1u);
    m.set(n - 1, 0);
    m.set(i + 1, tail + 1u);
  }
}

/// All degree-d monomials in n variables, descending lex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for_each_monomial_desc_lex(n, d, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

/// binom(n + d - 1, d): the number of degree-d monomials in n variables.
inline std::uint64_t count_monomials(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  std::uint64_t r = 1;
  for (unsigned k = 1; k <= d; ++k) r = r * (n - 1 + k) / k;
  return r;
}

}  // namespace gin
