// Multivariate division, Buchberger's algorithm and reduced Groebner bases.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gin/error.hpp"
#include "gin/field.hpp"
#include "gin/polynomial.hpp"

namespace gin {

/// Caps for a single Buchberger run. Zero means unlimited.
struct Budget {
  std::chrono::milliseconds wall{0};
  std::size_t max_pairs = 0;
  std::size_t max_basis = 0;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

template <class F>
struct GroebnerBasis {
  std::vector<Polynomial<F>> generators;
  MonomialOrder order;
  bool reduced = false;

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : generators) out.push_back(g.lead_monomial());
    return out;
  }
};

// Coefficient normalization: primitive integer form with positive lead over
// Q, monic over prime fields.
inline void normalize_content(std::vector<Term<Rational>>& terms) {
  if (terms.empty()) return;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.value().get_den_mpz_t());
  for (const auto& t : terms) {
    mpz_class v = t.coef.value().get_num() * (den / t.coef.value().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  if (terms.front().coef.sign() < 0) num = -num;
  if (den == 1 && num == 1) return;
  Rational scale(den, num);
  for (auto& t : terms) t.coef *= scale;
}

template <std::uint32_t P>
void normalize_content(std::vector<Term<ModP<P>>>& terms) {
  if (terms.empty() || terms.front().coef.is_one()) return;
  auto inv = terms.front().coef.inverse();
  for (auto& t : terms) t.coef *= inv;
}

template <class F>
Polynomial<F> normalized(Polynomial<F> f) {
  normalize_content(f.mutable_terms());
  return f;
}

namespace detail {

/// Reducers kept in ascending order of lead monomial; the first divisor wins.
template <class F>
class ReducerList {
 public:
  explicit ReducerList(const MonomialOrder& ord) : ord_(ord) {}

  void add(const Polynomial<F>* g) {
    auto pos = std::upper_bound(items_.begin(), items_.end(), g, [&](const Polynomial<F>* a, const Polynomial<F>* b) {
      return ord_.less(a->lead_monomial(), b->lead_monomial());
    });
    items_.insert(pos, g);
  }

  void remove(const Polynomial<F>* g) { items_.erase(std::find(items_.begin(), items_.end(), g)); }

  const Polynomial<F>* find(const Monomial& m) const {
    for (const auto* g : items_)
      if (g->lead_monomial().divides(m)) return g;
    return nullptr;
  }

  bool empty() const { return items_.empty(); }

 private:
  const MonomialOrder& ord_;
  std::vector<const Polynomial<F>*> items_;
};

template <class F>
void scale_terms(std::vector<Term<F>>& terms, const F& c) {
  if (c.is_one()) return;
  for (auto& t : terms) t.coef *= c;
}

/// out = a * p - b * (m * g_tail), both inputs strictly descending.
template <class F>
void merge_sub(std::vector<Term<F>>& out, std::span<const Term<F>> p, const F& a, const F& b, const Monomial& m,
               std::span<const Term<F>> g_tail, const MonomialOrder& ord) {
  out.clear();
  out.reserve(p.size() + g_tail.size());
  const bool scale_p = !a.is_one();
  std::size_t i = 0, j = 0;
  std::optional<Monomial> gm;
  if (!g_tail.empty()) gm = g_tail[0].mono * m;
  while (i < p.size() || j < g_tail.size()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == p.size())
      c = std::strong_ordering::less;
    else if (j < g_tail.size())
      c = ord.compare_unchecked(p[i].mono, *gm);
    if (c > 0) {
      out.push_back(p[i]);
      if (scale_p) out.back().coef *= a;
      ++i;
    } else {
      F v = -(b * g_tail[j].coef);
      if (c == 0) {
        v += scale_p ? a * p[i].coef : p[i].coef;
        ++i;
      }
      if (!v.is_zero()) out.push_back({std::move(v), *gm});
      if (++j < g_tail.size()) gm = g_tail[j].mono * m;
    }
  }
}

inline void strip_joint_content(std::vector<Term<Rational>>& p, std::vector<Term<Rational>>& r, Rational* scale) {
  mpz_class g = 0;
  for (const auto* v : {&p, &r})
    for (const auto& t : *v) {
      if (!t.coef.is_integer()) return;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.value().get_num_mpz_t());
      if (g == 1) return;
    }
  if (g == 0 || g == 1) return;
  Rational inv(mpz_class(1), g);
  for (auto* v : {&p, &r})
    for (auto& t : *v) t.coef *= inv;
  if (scale) *scale *= inv;
}

/// Full reduction of `p` by `reducers`. Over Q the work is fraction-free and
/// the returned remainder equals `scale` times the true remainder; over prime
/// fields it is exact and `scale` stays 1.
template <class F>
std::vector<Term<F>> reduce_terms(std::vector<Term<F>> p, const ReducerList<F>& reducers, const MonomialOrder& ord,
                                  F* scale = nullptr) {
  std::vector<Term<F>> r, scratch;
  if (reducers.empty()) return p;
  std::size_t head = 0;
  std::size_t steps = 0;
  while (head < p.size()) {
    const Term<F>& lead = p[head];
    const Polynomial<F>* g = reducers.find(lead.mono);
    if (g == nullptr) {
      r.push_back(lead);
      ++head;
      continue;
    }
    Monomial m = Monomial::exact_quotient(lead.mono, g->lead_monomial());
    std::span<const Term<F>> rest(p.data() + head + 1, p.size() - head - 1);
    std::span<const Term<F>> g_tail = g->terms().subspan(1);
    if constexpr (F::kFractionFree) {
      // a * p - b * m * g with a = lc(g), b = lc(p), divided by their gcd.
      mpz_class a = g->lead_coefficient().numerator(), b = lead.coef.numerator();
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      F fa(mpz_class(a / d)), fb(mpz_class(b / d));
      if (!g->lead_coefficient().is_integer() || !lead.coef.is_integer()) {
        fa = g->lead_coefficient();
        fb = lead.coef;
      }
      if (fa.sign() < 0) {
        fa = -fa;
        fb = -fb;
      }
      merge_sub(scratch, rest, fa, fb, m, g_tail, ord);
      scale_terms(r, fa);
      if (scale) *scale *= fa;
      if (++steps % 8 == 0) strip_joint_content(scratch, r, scale);
    } else {
      F b = lead.coef / g->lead_coefficient();
      merge_sub(scratch, rest, F(1), b, m, g_tail, ord);
    }
    std::swap(p, scratch);
    head = 0;
  }
  return r;
}

}  // namespace detail

/// Remainder r of f under full multivariate division by G with respect to
/// `ord`: f - r lies in (G) and no term of r is divisible by a lead of G.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const MonomialOrder& ord) {
  std::vector<Polynomial<F>> reorders;
  reorders.reserve(G.size());
  for (const auto& g : G) {
    f.check_ring(g);
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    reorders.push_back(g.with_order(ord));
  }
  detail::ReducerList<F> reducers(ord);
  for (const auto& g : reorders) reducers.add(&g);
  Polynomial<F> fo = f.with_order(ord);
  F scale(1);
  auto r = detail::reduce_terms(std::vector<Term<F>>(fo.terms().begin(), fo.terms().end()), reducers, ord, &scale);
  if (!scale.is_one()) detail::scale_terms(r, scale.inverse());
  return Polynomial<F>::from_sorted_terms(f.ring_ptr(), ord, std::move(r));
}

/// lcm/LT(f) * f - lcm/LT(g) * g, with LT including the coefficient.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f0, const Polynomial<F>& g0, const MonomialOrder& ord) {
  f0.check_ring(g0);
  if (f0.is_zero() || g0.is_zero()) throw std::invalid_argument("s_polynomial of zero polynomial");
  auto f = f0.with_order(ord), g = g0.with_order(ord);
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  return f.mul_term(f.lead_coefficient().inverse(), Monomial::exact_quotient(l, f.lead_monomial())) -
         g.mul_term(g.lead_coefficient().inverse(), Monomial::exact_quotient(l, g.lead_monomial()));
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

template <class F>
class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const Budget& budget)
      : ord_(ord), budget_(budget), reducers_(ord_), start_(std::chrono::steady_clock::now()) {}

  void insert_generator(const Polynomial<F>& f) {
    std::vector<Term<F>> terms(f.terms().begin(), f.terms().end());
    normalize_content(terms);
    auto r = reduce_terms(std::move(terms), reducers_, ord_);
    if (r.empty()) return;
    normalize_content(r);
    update(Polynomial<F>::from_sorted_terms(f.ring_ptr(), ord_, std::move(r)));
  }

  void run() {
    while (!pairs_.empty()) {
      check_budget();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (before(pairs_[k], pairs_[best])) best = k;
      CriticalPair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_processed;
      auto s = spoly_terms(*polys_[pr.i], *polys_[pr.j], pr.lcm);
      auto r = reduce_terms(std::move(s), reducers_, ord_);
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      normalize_content(r);
      update(Polynomial<F>::from_sorted_terms(polys_[pr.i]->ring_ptr(), ord_, std::move(r)));
    }
  }

  std::vector<Polynomial<F>> basis() const {
    std::vector<Polynomial<F>> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(*polys_[k]);
    return out;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  bool before(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ord_.compare_unchecked(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  std::vector<Term<F>> spoly_terms(const Polynomial<F>& f, const Polynomial<F>& g, const Monomial& l) const {
    std::vector<Term<F>> fm, out;
    Monomial uf = Monomial::exact_quotient(l, f.lead_monomial());
    Monomial ug = Monomial::exact_quotient(l, g.lead_monomial());
    fm.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) fm.push_back({f.terms()[k].coef, f.terms()[k].mono * uf});
    F a = g.lead_coefficient(), b = f.lead_coefficient();
    if constexpr (F::kFractionFree) {
      if (a.is_integer() && b.is_integer()) {
        mpz_class d, an = a.numerator(), bn = b.numerator();
        mpz_gcd(d.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
        a = F(mpz_class(an / d));
        b = F(mpz_class(bn / d));
      }
      merge_sub(out, std::span<const Term<F>>(fm), a, b, ug, g.terms().subspan(1), ord_);
    } else {
      merge_sub(out, std::span<const Term<F>>(fm), F(1), b / a, ug, g.terms().subspan(1), ord_);
    }
    return out;
  }

  // Gebauer-Moeller installation of a new basis element h.
  void update(Polynomial<F> h_poly) {
    if (budget_.max_basis != 0 && polys_.size() >= budget_.max_basis)
      throw BudgetExhausted("basis size cap of " + std::to_string(budget_.max_basis) + " reached");
    // Grow by moving ownership into stable heap slots.
    owned_.push_back(std::make_unique<Polynomial<F>>(std::move(h_poly)));
    const Polynomial<F>* hp = owned_.back().get();
    const std::size_t h = polys_.size();
    polys_.push_back(hp);
    active_.push_back(true);
    const Monomial& lh = hp->lead_monomial();

    std::vector<CriticalPair> C;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) C.push_back({g, h, lcm(polys_[g]->lead_monomial(), lh)});

    // Keep (g, h) unless some other new pair has an lcm properly dividing it,
    // with coprime pairs always kept at this stage.
    std::vector<CriticalPair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto& p = C[k];
      bool coprime = polys_[p.i]->lead_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t q = k + 1; q < C.size() && !dominated; ++q) dominated = C[q].lcm.divides(p.lcm);
        for (std::size_t q = 0; q < D.size() && !dominated; ++q) dominated = D[q].lcm.divides(p.lcm);
      }
      if (!dominated) D.push_back(p);
      else ++stats_.pairs_skipped;
    }
    std::vector<CriticalPair> E;
    for (auto& p : D) {
      if (polys_[p.i]->lead_monomial().coprime(lh))
        ++stats_.pairs_skipped;
      else
        E.push_back(std::move(p));
    }
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size() + E.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i]->lead_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j]->lead_monomial(), lh) == p.lcm);
      if (drop)
        ++stats_.pairs_skipped;
      else
        kept.push_back(std::move(p));
    }
    for (auto& p : E) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    if (budget_.max_pairs != 0 && pairs_.size() > budget_.max_pairs)
      throw BudgetExhausted("pair queue cap of " + std::to_string(budget_.max_pairs) + " exceeded");

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g]->lead_monomial())) {
        active_[g] = false;
        reducers_.remove(polys_[g]);
      }
    }
    reducers_.add(hp);
  }

  void check_budget() const {
    if (budget_.wall.count() == 0) return;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    if (elapsed > budget_.wall)
      throw BudgetExhausted("wall-clock budget of " + std::to_string(budget_.wall.count()) + " ms exhausted");
  }

  const MonomialOrder& ord_;
  Budget budget_;
  ReducerList<F> reducers_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::unique_ptr<Polynomial<F>>> owned_;
  std::vector<const Polynomial<F>*> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  GroebnerStats stats_;
};

}  // namespace detail

/// Groebner basis of (gens) under `ord`. Elements are content-normalized but
/// not interreduced; pass the result to reduce_basis for the canonical form.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord, const Budget& budget = {},
                            GroebnerStats* stats = nullptr) {
  for (std::size_t k = 1; k < gens.size(); ++k) gens[0].check_ring(gens[k]);
  detail::Buchberger<F> engine(ord, budget);
  for (const auto& g : gens)
    if (!g.is_zero()) engine.insert_generator(g.with_order(ord));
  engine.run();
  if (stats) *stats = engine.stats();
  return {engine.basis(), ord, false};
}

/// The unique reduced basis: monic, and no term of any element divisible by
/// another element's lead monomial. Sorted by descending lead monomial.
/// Elements are interreduced until nothing changes, so a generating set whose
/// leads already generate the initial ideal (in particular any Groebner
/// basis) comes out canonical.
template <class F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& G) {
  const auto& ord = G.order;
  std::vector<Polynomial<F>> polys;
  for (const auto& g : G.generators)
    if (!g.is_zero()) polys.push_back(g.with_order(ord).monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      std::vector<Polynomial<F>> others;
      for (std::size_t q = 0; q < polys.size(); ++q)
        if (q != k) others.push_back(polys[q]);
      auto r = normal_form(polys[k], others, ord);
      if (r.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
      r = r.monic();
      if (!(r == polys[k])) {
        polys[k] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(polys.begin(), polys.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return ord.greater(a.lead_monomial(), b.lead_monomial());
  });
  return {std::move(polys), ord, true};
}

/// Convenience: reduced basis of (gens).
template <class F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord,
                                        const Budget& budget = {}) {
  return reduce_basis(buchberger(gens, ord, budget));
}

/// True iff every S-polynomial of G reduces to zero modulo G.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& G) {
  for (std::size_t i = 0; i < G.generators.size(); ++i)
    for (std::size_t j = i + 1; j < G.generators.size(); ++j)
      if (!normal_form(s_polynomial(G.generators[i], G.generators[j], G.order), G.generators, G.order).is_zero())
        return false;
  return true;
}

struct StabilityVerdict {
  bool stable = false;
  /// Indices into the input basis whose leading coefficient survives.
  std::vector<std::size_t> survivors;
};

/// Specialization test on a basis G over k[t][x] computed under an inverse
/// block order. Elements whose leading coefficient (in x over k[t]) does not
/// vanish at the point survive; G is stable at the point iff every other
/// specialized element reduces to zero modulo the specialized survivors.
template <class F>
StabilityVerdict stability_check(const GroebnerBasis<F>& G, const ParameterPoint<F>& point) {
  StabilityVerdict v;
  if (G.generators.empty()) {
    v.stable = true;
    return v;
  }
  const Ring& ring = G.generators.front().ring();
  for (auto i : ring.parameter_indices())
    if (point.find(i) == point.end()) throw std::invalid_argument("parameter " + ring.name(i) + " has no assigned value");
  auto main_order = restricted_main_order(G.order, ring.main_indices().size());
  std::vector<Polynomial<F>> survivors, vanished;
  for (std::size_t k = 0; k < G.generators.size(); ++k) {
    const auto& g = G.generators[k];
    auto lead = block_leading_data(g, main_order.kind(), G.order.is_block() ? G.order.param_kind() : OrderKind::degrevlex);
    F value(0);
    auto params = ring.parameter_indices();
    for (const auto& t : lead.lead_coefficient.terms()) {
      F c = t.coef;
      for (std::size_t q = 0; q < params.size(); ++q)
        if (t.mono[q] != 0) c *= power(point.at(params[q]), t.mono[q]);
      value += c;
    }
    auto sg = specialize(g, point, main_order);
    if (!value.is_zero()) {
      v.survivors.push_back(k);
      survivors.push_back(std::move(sg));
    } else {
      vanished.push_back(std::move(sg));
    }
  }
  for (const auto& h : vanished) {
    if (h.is_zero()) continue;
    if (survivors.empty() || !normal_form(h, survivors, main_order).is_zero()) {
      v.stable = false;
      return v;
    }
  }
  v.stable = true;
  return v;
}

}  // namespace gin
