// Monomial ideals and Hilbert functions of their quotients.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gin/error.hpp"
#include "gin/monomial.hpp"
#include "gin/order.hpp"

namespace gin {

/// Truncated power series c_0 + c_1 t + ... + c_D t^D. When known, the
/// rational form numerator(t) / (1 - t)^denominator_power is kept alongside.
struct SeriesWindow {
  struct RationalForm {
    std::vector<std::int64_t> numerator;
    unsigned denominator_power = 0;
    friend bool operator==(const RationalForm&, const RationalForm&) = default;
  };

  std::vector<std::int64_t> coeffs;
  std::optional<RationalForm> rational;

  std::size_t horizon() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// Coefficient at t^d; requires d within the horizon.
  std::int64_t at(std::size_t d) const {
    if (d >= coeffs.size()) throw std::out_of_range("series coefficient beyond horizon");
    return coeffs[d];
  }
  friend bool operator==(const SeriesWindow& a, const SeriesWindow& b) { return a.coeffs == b.coeffs; }
};

/// binom(a, b) for small arguments, 0 when b is out of range.
inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

/// First D+1 coefficients of numerator(t) / (1 - t)^k.
inline SeriesWindow expand_rational(const std::vector<std::int64_t>& numerator, unsigned k, std::size_t D) {
  SeriesWindow w;
  w.coeffs.assign(D + 1, 0);
  for (std::size_t d = 0; d <= D; ++d) {
    std::int64_t c = 0;
    for (std::size_t j = 0; j < numerator.size() && j <= d; ++j) {
      if (numerator[j] == 0) continue;
      // [t^m] (1 - t)^-k = binom(m + k - 1, k - 1); for k = 0 only m = 0 counts.
      std::int64_t m = static_cast<std::int64_t>(d - j);
      std::int64_t coeff = k == 0 ? (m == 0 ? 1 : 0) : binomial(m + k - 1, k - 1);
      c += numerator[j] * coeff;
    }
    w.coeffs[d] = c;
  }
  w.rational = SeriesWindow::RationalForm{numerator, k};
  return w;
}

/// Monomial ideal held by its minimal generators, sorted descending lex.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  /// Removes every monomial divisible by another one in the set.
  static MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> monomials) {
    for (const auto& m : monomials)
      if (m.size() != n) throw DimensionMismatch("generator variable count differs from ideal");
    // After sorting by degree, a divisor always precedes its multiples.
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return detail::compare_full(OrderKind::lex, a, b) > 0;
    });
    MonomialIdeal J(n);
    for (const auto& m : monomials) {
      bool divisible = std::any_of(J.gens_.begin(), J.gens_.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!divisible) J.gens_.push_back(m);
    }
    J.sort_canonical();
    return J;
  }

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    if (m.size() != n_) throw DimensionMismatch("monomial variable count differs from ideal");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// Largest degree of a minimal generator.
  unsigned maxdeg() const {
    if (gens_.empty()) throw std::domain_error("maxdeg of the zero ideal");
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Number of minimal generators in each degree 0..max(maxdeg, upto).
  std::vector<std::size_t> generator_counts(unsigned upto = 0) const {
    unsigned top = gens_.empty() ? upto : std::max(upto, maxdeg());
    std::vector<std::size_t> counts(top + 1, 0);
    for (const auto& g : gens_) ++counts[g.degree()];
    return counts;
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    std::string out = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (k) out += ", ";
      out += gens_[k].to_string(names);
    }
    return out + ")";
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  void sort_canonical() {
    std::sort(gens_.begin(), gens_.end(),
              [](const Monomial& a, const Monomial& b) { return detail::compare_full(OrderKind::lex, a, b) > 0; });
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Convenience alias matching the operation name.
inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> monomials) {
  return MonomialIdeal::minimalize(n, std::move(monomials));
}

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

inline IntPoly trim(IntPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

class HilbertNumerator {
 public:
  explicit HilbertNumerator(std::size_t n) : n_(n) {}

  IntPoly operator()(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
      if (g.is_one()) return {0};
    std::vector<std::uint16_t> key;
    key.reserve(gens.size() * n_);
    for (const auto& g : gens)
      for (auto e : g.exponents()) key.push_back(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPoly result;
    std::vector<std::size_t> freq(n_, 0);
    bool coprime = true;
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
      if (g.support() & seen) coprime = false;
      seen |= g.support();
      for (std::size_t i = 0; i < n_; ++i)
        if (g[i] > 0) ++freq[i];
    }
    if (coprime) {
      // Regular sequence of monomials: product of (1 - t^deg).
      result = {1};
      for (const auto& g : gens) {
        IntPoly next(result.size() + g.degree(), 0);
        for (std::size_t k = 0; k < result.size(); ++k) {
          next[k] += result[k];
          next[k + g.degree()] -= result[k];
        }
        result = std::move(next);
      }
    } else {
      // Pivot on the most frequent variable: N(J) = N(J + (x)) + t N(J : x).
      std::size_t x = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
      Monomial var = Monomial::variable(n_, x);
      std::vector<Monomial> with_pivot{var}, colon;
      for (const auto& g : gens) {
        if (g[x] == 0) with_pivot.push_back(g);
        Monomial q = g;
        if (q[x] > 0) q.set(x, q[x] - 1u);
        colon.push_back(q);
      }
      auto a = (*this)(MonomialIdeal::minimalize(n_, std::move(with_pivot)).generators());
      auto b = (*this)(MonomialIdeal::minimalize(n_, std::move(colon)).generators());
      result = a;
      add_shifted(result, b, 1);
    }
    result = trim(std::move(result));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::size_t n_;
  std::map<std::vector<std::uint16_t>, IntPoly> memo_;
};

}  // namespace detail

/// N(t) with HS(S/J; t) = N(t) / (1 - t)^n. The memo table lives for one call.
inline std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& J) {
  detail::HilbertNumerator eval(J.nvars());
  return eval(J.generators());
}

inline unsigned default_horizon(const MonomialIdeal& J) {
  unsigned base = J.is_zero() ? 0 : J.maxdeg();
  return std::max<unsigned>(base + static_cast<unsigned>(J.nvars()), 10);
}

/// HS(S/J) to the given horizon (default max(maxdeg + n, 10)).
inline SeriesWindow hilbert_series(const MonomialIdeal& J, std::optional<std::size_t> horizon = std::nullopt) {
  return expand_rational(hilbert_numerator(J), static_cast<unsigned>(J.nvars()), horizon.value_or(default_horizon(J)));
}

/// dim_k (S/J)_d.
inline std::int64_t hilbert_function(const MonomialIdeal& J, std::size_t d) {
  return hilbert_series(J, d).coeffs[d];
}

/// Degree-d monomials of J, descending lex.
inline std::vector<Monomial> ideal_monomials_of_degree(const MonomialIdeal& J, unsigned d) {
  std::vector<Monomial> out;
  for_each_monomial_desc_lex(J.nvars(), d, [&](const Monomial& m) {
    if (J.contains(m)) out.push_back(m);
  });
  return out;
}

}  // namespace gin
