// Exact coefficient fields: arbitrary-precision rationals and prime fields.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "gin/error.hpp"
#include "gin/primes.hpp"

namespace gin {

namespace detail {

inline bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace detail

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  /// Reduction over Q runs fraction-free with content stripping.
  static constexpr bool kFractionFree = true;
  static constexpr std::uint32_t kCharacteristic = 0;

  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& v) : v_(v) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "a" or "a/b" with decimal integers.
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    mpz_class num, den = 1;
    if (!detail::parse_integer(s.substr(0, slash), num) ||
        (slash != std::string_view::npos && !detail::parse_integer(s.substr(slash + 1), den)))
      throw ParseError("malformed coefficient '" + std::string(s) + "'");
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }

  static std::string name() { return "Q"; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string str() const { return v_.get_str(); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

/// Residue class modulo the prime P, stored in [0, P).
template <std::uint32_t P>
class ModP {
  static_assert(is_prime(P), "ModP modulus must be prime");
  static_assert(P < (1u << 31), "ModP modulus must fit in 31 bits");

 public:
  static constexpr bool kFractionFree = false;
  static constexpr std::uint32_t kCharacteristic = P;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : r_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) + P) % P)) {}

  static ModP from_rational(const Rational& q) {
    mpz_class num = q.numerator() % P;
    mpz_class den = q.denominator() % P;
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(P));
    return ModP(num.get_si()) / ModP(den.get_si());
  }

  static ModP parse(std::string_view s) { return from_rational(Rational::parse(s)); }

  static std::string name() { return "F" + std::to_string(P); }

  constexpr bool is_zero() const { return r_ == 0; }
  constexpr bool is_one() const { return r_ == 1; }
  constexpr std::uint32_t value() const { return r_; }
  /// Symmetric representative in (-P/2, P/2], used for printing.
  constexpr std::int64_t signed_value() const {
    return r_ > P / 2 ? static_cast<std::int64_t>(r_) - P : r_;
  }
  std::string str() const { return std::to_string(signed_value()); }

  constexpr ModP inverse() const {
    if (r_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t a = r_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return ModP(x0);
  }

  constexpr ModP operator-() const { return from_raw(r_ == 0 ? 0 : P - r_); }
  constexpr ModP& operator+=(ModP o) {
    r_ += o.r_;
    if (r_ >= P) r_ -= P;
    return *this;
  }
  constexpr ModP& operator-=(ModP o) {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + P - o.r_;
    return *this;
  }
  constexpr ModP& operator*=(ModP o) {
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % P);
    return *this;
  }
  constexpr ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  friend constexpr ModP operator+(ModP a, ModP b) { return a += b; }
  friend constexpr ModP operator-(ModP a, ModP b) { return a -= b; }
  friend constexpr ModP operator*(ModP a, ModP b) { return a *= b; }
  friend constexpr ModP operator/(ModP a, ModP b) { return a /= b; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.r_ == b.r_; }

 private:
  static constexpr ModP from_raw(std::uint32_t r) {
    ModP m;
    m.r_ = r;
    return m;
  }
  std::uint32_t r_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
using GF32003 = ModP<kDefaultPrime>;

/// Converts an integer-valued sample into field F.
template <class F>
F field_from_int(std::int64_t v) {
  if constexpr (std::is_same_v<F, Rational>) {
    return Rational(static_cast<long>(v));
  } else {
    return F(v);
  }
}

}  // namespace gin
