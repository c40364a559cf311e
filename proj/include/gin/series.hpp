// Froeberg bracket series, lexsegment ideals from Hilbert functions, and the
// Groebner degree bound they give.
#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gin/error.hpp"
#include "gin/monomial_ideal.hpp"

namespace gin {

struct FroebergSpec {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::size_t horizon = 0;
};

/// Keeps coefficients up to the first non-positive one; that one and every
/// later coefficient become zero.
inline SeriesWindow bracket_truncate(const SeriesWindow& series) {
  SeriesWindow out;
  out.coeffs = series.coeffs;
  bool cut = false;
  for (auto& c : out.coeffs) {
    if (c <= 0) cut = true;
    if (cut) c = 0;
  }
  if (!cut) out.rational = series.rational;
  return out;
}

/// prod (1 - t^d_i) as an integer polynomial.
inline std::vector<std::int64_t> froeberg_numerator(const std::vector<unsigned>& degrees) {
  std::vector<std::int64_t> num{1};
  for (unsigned d : degrees) {
    std::vector<std::int64_t> next(num.size() + d, 0);
    for (std::size_t k = 0; k < num.size(); ++k) {
      next[k] += num[k];
      next[k + d] -= num[k];
    }
    num = std::move(next);
  }
  return num;
}

/// [prod (1 - t^d_i) / (1 - t)^n] truncated at the horizon.
inline SeriesWindow froeberg_series(const FroebergSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("froeberg_series: n must be at least 1");
  for (unsigned d : spec.degrees)
    if (d == 0) throw std::invalid_argument("froeberg_series: degrees must be positive");
  return bracket_truncate(expand_rational(froeberg_numerator(spec.degrees), static_cast<unsigned>(spec.n), spec.horizon));
}

/// sum(d_i - 1) + n + 1, the horizon used when the caller supplies none.
inline std::size_t default_froeberg_horizon(std::size_t n, const std::vector<unsigned>& degrees) {
  std::size_t h = n + 1;
  for (unsigned d : degrees) h += d - 1;
  return h;
}

struct LexsegmentResult {
  MonomialIdeal ideal;
  std::size_t horizon = 0;
  /// A minimal generator appeared within the last n degrees of the horizon,
  /// so generators beyond it cannot be ruled out.
  bool horizon_uncertain = false;
};

/// Builds the lexsegment ideal whose degree-d piece consists of the
/// dim S_d - hf_d lex-largest monomials, for d <= D, and verifies that it
/// reproduces hf. Throws Inadmissible when it does not.
inline LexsegmentResult lexsegment_of_hf(std::size_t n, const SeriesWindow& hf, std::size_t D) {
  if (n == 0) throw std::invalid_argument("lexsegment_of_hf: n must be at least 1");
  if (hf.coeffs.size() <= D) throw std::invalid_argument("Hilbert function window shorter than the horizon");
  std::vector<Monomial> gens;
  MonomialIdeal current(n);
  unsigned last_new = 0;
  bool any_new = false;
  for (std::size_t d = 0; d <= D; ++d) {
    auto dim = static_cast<std::int64_t>(count_monomials(n, static_cast<unsigned>(d)));
    std::int64_t h = hf.coeffs[d];
    if (h < 0 || h > dim)
      throw Inadmissible("Hilbert function value " + std::to_string(h) + " out of range in degree " + std::to_string(d));
    std::int64_t need = dim - h;
    if (need == 0) continue;
    std::int64_t taken = 0;
    bool added = false;
    for_each_monomial_desc_lex(n, static_cast<unsigned>(d), [&](const Monomial& m) {
      if (!current.contains(m)) {
        gens.push_back(m);
        added = true;
      }
      return ++taken < need;
    });
    if (added) {
      current = MonomialIdeal::minimalize(n, gens);
      last_new = static_cast<unsigned>(d);
      any_new = true;
    }
  }
  // The lex prefix of each degree must contain everything generated below;
  // checking the Hilbert function of the result catches every violation.
  SeriesWindow got = hilbert_series(current, D);
  for (std::size_t d = 0; d <= D; ++d)
    if (got.coeffs[d] != hf.coeffs[d])
      throw Inadmissible("no lexsegment ideal realizes the Hilbert function: degree " + std::to_string(d) + " gives " +
                         std::to_string(got.coeffs[d]) + ", expected " + std::to_string(hf.coeffs[d]));
  LexsegmentResult out{current, D, false};
  out.horizon_uncertain = any_new && D < n + last_new;
  return out;
}

/// Runs lexsegment_of_hf on windows from `hf_of_horizon`, widening the
/// horizon by n while it stays uncertain, up to `max_horizon`.
inline LexsegmentResult lexsegment_extending(std::size_t n, const std::function<SeriesWindow(std::size_t)>& hf_of_horizon,
                                             std::size_t horizon, std::size_t max_horizon) {
  auto result = lexsegment_of_hf(n, hf_of_horizon(horizon), horizon);
  while (result.horizon_uncertain && horizon + n <= max_horizon) {
    horizon += n;
    result = lexsegment_of_hf(n, hf_of_horizon(horizon), horizon);
  }
  return result;
}

inline constexpr std::size_t kMaxAutoHorizon = 64;

/// Lexsegment ideal of the Froeberg series of (n, degrees). With no explicit
/// horizon the default one is widened while generators keep appearing near it.
inline LexsegmentResult lexsegment_of_froeberg(std::size_t n, const std::vector<unsigned>& degrees,
                                               std::optional<std::size_t> horizon = std::nullopt) {
  auto hf = [&](std::size_t D) { return froeberg_series({n, degrees, D}); };
  if (horizon) return lexsegment_of_hf(n, hf(*horizon), *horizon);
  return lexsegment_extending(n, hf, default_froeberg_horizon(n, degrees), kMaxAutoHorizon);
}

/// Lexsegment ideal with the same Hilbert series as J.
inline LexsegmentResult lexsegment_of_ideal(const MonomialIdeal& J, std::optional<std::size_t> horizon = std::nullopt) {
  auto hf = [&](std::size_t D) { return hilbert_series(J, D); };
  if (horizon) return lexsegment_of_hf(J.nvars(), hf(*horizon), *horizon);
  return lexsegment_extending(J.nvars(), hf, default_horizon(J), kMaxAutoHorizon);
}

/// maxdeg of the lexsegment ideal of hf: an upper bound for the largest
/// degree in any reduced Groebner basis of an ideal with this Hilbert function.
inline unsigned maxgbdeg_bound(std::size_t n, const SeriesWindow& hf, std::size_t D) {
  auto lex = lexsegment_of_hf(n, hf, D);
  return lex.ideal.is_zero() ? 0 : lex.ideal.maxdeg();
}

}  // namespace gin
