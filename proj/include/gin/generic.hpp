// Initial ideals of generic homogeneous ideals.
//
// The generic ideal of type (n; d_1..d_s) is generated by templates
//   F_i = t_{i,1} x_1^{d_i} + t_{i,2} x_1^{d_i-1} x_2 + ... + t_{i,r_i} x_n^{d_i}
// with one parameter per degree-d_i monomial. Its initial ideal is reached
// either by specializing the parameters at random points and taking the
// majority answer, or by one Groebner basis over k[t, x] under an inverse
// block order, reading off the main-variable parts of the lead monomials.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gin/error.hpp"
#include "gin/groebner.hpp"
#include "gin/linalg.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"
#include "gin/series.hpp"

namespace gin {

/// Shape of a generic ideal plus the parametric ring x_1..x_n, t_{i,k}.
class GenericInstance {
 public:
  GenericInstance(std::size_t n, std::vector<unsigned> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n_ == 0) throw std::invalid_argument("need at least one variable");
    if (degrees_.empty()) throw std::invalid_argument("need at least one generator degree");
    std::vector<std::string> main, params;
    for (std::size_t i = 1; i <= n_; ++i) main.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (degrees_[i] == 0) throw std::invalid_argument("generator degrees must be positive");
      std::size_t r = count_monomials(n_, degrees_[i]);
      sizes_.push_back(r);
      for (std::size_t k = 1; k <= r; ++k) params.push_back("t" + std::to_string(i + 1) + "_" + std::to_string(k));
    }
    parameter_count_ = params.size();
    main_ring_ = Ring::make(main);
    // Sampling needs only the main ring; the full ring exists when it fits.
    if (n_ + params.size() <= kMaxVariables) ring_ = Ring::make_parametric(std::move(main), std::move(params));
  }

  std::size_t n() const { return n_; }
  std::size_t s() const { return degrees_.size(); }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  /// r_i = binom(n + d_i - 1, d_i), the number of terms of F_i.
  const std::vector<std::size_t>& template_sizes() const { return sizes_; }
  std::size_t parameter_count() const { return parameter_count_; }
  bool has_parametric_ring() const { return ring_ != nullptr; }
  /// The ring x_1..x_n, t_{i,k}; throws when it exceeds kMaxVariables.
  const RingPtr& ring() const {
    if (!ring_)
      throw std::invalid_argument("instance needs " + std::to_string(n_ + parameter_count_) + " variables, at most " +
                                  std::to_string(kMaxVariables) + " supported");
    return ring_;
  }
  const RingPtr& main_ring() const { return main_ring_; }

  /// Inverse block order on x and t.
  MonomialOrder block_order(OrderKind main, OrderKind param) const {
    const auto& R = ring();
    std::vector<std::size_t> idx(R->main_indices().begin(), R->main_indices().end());
    return MonomialOrder::inverse_block(R->nvars(), idx, main, param);
  }

  /// F_1..F_s; parameter t_{i,k} multiplies the k-th degree-d_i monomial in
  /// descending lex order.
  template <class F>
  std::vector<Polynomial<F>> templates(const MonomialOrder& ord) const {
    std::vector<Polynomial<F>> out;
    const auto& R = ring();
    std::size_t param = n_;
    const std::size_t total = R->nvars();
    for (unsigned d : degrees_) {
      std::vector<Term<F>> terms;
      for (const auto& m : monomials_of_degree(n_, d)) {
        Monomial full(total);
        for (std::size_t v = 0; v < n_; ++v) full.set(v, m[v]);
        full.set(param++, 1);
        terms.push_back({F(1), full});
      }
      out.push_back(Polynomial<F>::from_terms(R, ord, std::move(terms)));
    }
    return out;
  }

  /// The specialized generators at an explicit integer point (length N).
  template <class F>
  std::vector<Polynomial<F>> ideal_at(const std::vector<std::int64_t>& point, const MonomialOrder& main_order) const {
    if (point.size() != parameter_count())
      throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                  std::to_string(parameter_count()));
    std::vector<Polynomial<F>> out;
    std::size_t k = 0;
    for (unsigned d : degrees_) {
      std::vector<Term<F>> terms;
      for (const auto& m : monomials_of_degree(n_, d)) terms.push_back({field_from_int<F>(point[k++]), m});
      out.push_back(Polynomial<F>::from_terms(main_ring_, main_order, std::move(terms)));
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> sizes_;
  std::size_t parameter_count_ = 0;
  RingPtr ring_;
  RingPtr main_ring_;
};

inline GenericInstance generic_templates(std::size_t n, std::vector<unsigned> degrees) {
  return GenericInstance(n, std::move(degrees));
}

/// Deterministic point with coordinates uniform over the nonzero integers in
/// [-B, B], drawn from mt19937_64 with rejection sampling so that the stream
/// is identical on every platform.
inline std::vector<std::int64_t> sample_point(std::size_t count, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::vector<std::int64_t> out;
  out.reserve(count);
  while (out.size() < count) {
    std::uint64_t x = rng();
    if (x >= limit) continue;
    auto k = static_cast<std::int64_t>(x % range);
    out.push_back(k < bound ? k - bound : k - bound + 1);
  }
  return out;
}

/// Generators of the ideal at a seeded random point.
template <class F>
std::vector<Polynomial<F>> sample_ideal(const GenericInstance& inst, std::uint64_t seed, std::int64_t bound,
                                        const MonomialOrder& main_order) {
  return inst.ideal_at<F>(sample_point(inst.parameter_count(), seed, bound), main_order);
}

/// dim S_d - rank of the Macaulay matrix of all degree-d shifts of `gens`.
template <class F>
std::int64_t hilbert_function_homogeneous(const std::vector<Polynomial<F>>& gens, std::size_t n, unsigned d) {
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_function_homogeneous: generator is not homogeneous");
    if (g.ring().nvars() != n) throw DimensionMismatch("generator ring does not have n variables");
  }
  auto cols = monomials_of_degree(n, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], k);
  std::vector<std::vector<F>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& tau : monomials_of_degree(n, d - g.degree())) {
      std::vector<F> row(cols.size(), F(0));
      for (const auto& t : g.terms()) row[index.at(t.mono * tau)] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(cols.size()) - static_cast<std::int64_t>(row_rank(std::move(rows), cols.size()));
}

enum class UGeneric { no, yes, conjectural_yes };

inline std::string to_string(UGeneric u) {
  switch (u) {
    case UGeneric::no: return "no";
    case UGeneric::yes: return "yes";
    case UGeneric::conjectural_yes: return "conjectural-yes";
  }
  return "?";
}

/// Compares the Hilbert function of (gens) with the Froeberg series up to D.
/// A match is a proof of U-genericity when s <= n (regular sequences) and only
/// conjectural otherwise.
template <class F>
UGeneric is_u_generic(const std::vector<Polynomial<F>>& gens, const GenericInstance& inst, std::size_t D) {
  auto expected = froeberg_series({inst.n(), inst.degrees(), D});
  for (std::size_t d = 0; d <= D; ++d)
    if (hilbert_function_homogeneous(gens, inst.n(), static_cast<unsigned>(d)) != expected.coeffs[d]) return UGeneric::no;
  return inst.s() <= inst.n() ? UGeneric::yes : UGeneric::conjectural_yes;
}

enum class Route { sampling, parametric };

inline std::string to_string(Route r) { return r == Route::sampling ? "sample" : "parametric"; }

struct GinResult {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::string order;
  Route route = Route::sampling;
  std::string field;
  MonomialIdeal ideal;
  /// Sampling only: one entry per trial.
  std::vector<std::uint64_t> seeds;
  std::vector<MonomialIdeal> per_seed;
  std::vector<UGeneric> u_generic;
  /// Number of trials whose ideal equals `ideal`.
  std::size_t agreement = 0;
  std::size_t trials = 0;
  std::int64_t bound = 0;
};

/// Minimal generators of the lead-monomial ideal of a Groebner basis.
template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& G, std::size_t n) {
  return MonomialIdeal::minimalize(n, G.lead_monomials());
}

struct SamplingOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;  // 0: p - 1 over GF(p), 99 over Q
  std::optional<std::size_t> u_generic_horizon;
  Budget budget;
};

/// Initial ideal of the generic ideal by majority over seeded random points.
/// Trial k uses seed + k. Throws Inconclusive without a strict majority.
template <class F>
GinResult gin_by_sampling(const GenericInstance& inst, OrderKind order, const SamplingOptions& opt = {}) {
  if (opt.trials == 0) throw std::invalid_argument("need at least one trial");
  const auto main_order = MonomialOrder::of_kind(order, inst.n());
  const std::int64_t bound = opt.bound != 0 ? opt.bound : (F::kCharacteristic == 0 ? 99 : F::kCharacteristic - 1);
  const std::size_t horizon = opt.u_generic_horizon.value_or(default_froeberg_horizon(inst.n(), inst.degrees()));
  GinResult res;
  res.n = inst.n();
  res.degrees = inst.degrees();
  res.order = std::string(to_string(order));
  res.route = Route::sampling;
  res.field = F::name();
  res.trials = opt.trials;
  res.bound = bound;
  for (std::size_t k = 0; k < opt.trials; ++k) {
    std::uint64_t seed = opt.seed + k;
    auto gens = sample_ideal<F>(inst, seed, bound, main_order);
    auto G = buchberger(gens, main_order, opt.budget);
    res.seeds.push_back(seed);
    res.per_seed.push_back(initial_ideal(G, inst.n()));
    res.u_generic.push_back(is_u_generic(gens, inst, horizon));
  }
  // Majority vote; the first ideal reaching the top count wins only if that
  // count is a strict majority.
  std::size_t best = 0, best_count = 0;
  for (std::size_t k = 0; k < res.per_seed.size(); ++k) {
    auto c = static_cast<std::size_t>(std::count(res.per_seed.begin(), res.per_seed.end(), res.per_seed[k]));
    if (c > best_count) {
      best = k;
      best_count = c;
    }
  }
  res.agreement = best_count;
  res.ideal = res.per_seed[best];
  if (2 * best_count <= opt.trials)
    throw Inconclusive("no strict majority among " + std::to_string(opt.trials) + " trials (best " +
                       std::to_string(best_count) + ")");
  return res;
}

struct ParametricOptions {
  OrderKind param_order = OrderKind::degrevlex;
  Budget budget;
};

/// Initial ideal of the generic ideal from a single Groebner basis of the
/// templates over k[t, x] under the inverse block order (x-order dominant):
/// the ideal generated by the x-parts of the lead monomials.
template <class F>
GinResult gin_parametric(const GenericInstance& inst, OrderKind order, const ParametricOptions& opt = {},
                         GroebnerStats* stats = nullptr) {
  auto ord = inst.block_order(order, opt.param_order);
  auto G = buchberger(inst.templates<F>(ord), ord, opt.budget, stats);
  auto main = inst.ring()->main_indices();
  std::vector<Monomial> leads;
  for (const auto& g : G.generators) {
    Monomial x = project(g.lead_monomial(), main);
    if (!x.is_one()) leads.push_back(x);
  }
  GinResult res;
  res.n = inst.n();
  res.degrees = inst.degrees();
  res.order = std::string(to_string(order));
  res.route = Route::parametric;
  res.field = F::name();
  res.ideal = MonomialIdeal::minimalize(inst.n(), std::move(leads));
  res.agreement = 1;
  return res;
}

}  // namespace gin
