// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gin/field.hpp"
#include "gin/monomial.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"

namespace gin::test {

inline Monomial mono(std::initializer_list<unsigned> e) { return Monomial(e); }

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<unsigned>> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.emplace_back(g);
  return MonomialIdeal::minimalize(n, ms);
}

/// Every exponent vector of total degree d in n variables by recursion, in
/// no particular order.
inline void enumerate_degree(std::size_t n, unsigned d, std::vector<unsigned>& cur, std::vector<Monomial>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(d);
    out.push_back(Monomial::from_exponents(cur));
    cur.pop_back();
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur.push_back(e);
    enumerate_degree(n, d - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Monomial> all_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur;
  enumerate_degree(n, d, cur, out);
  return out;
}

/// Standard-monomial count by enumeration and explicit divisibility checks.
inline std::int64_t brute_force_hf(const std::vector<Monomial>& gens, std::size_t n, unsigned d) {
  std::int64_t count = 0;
  for (const auto& m : all_of_degree(n, d)) {
    bool in = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i) div = div && g[i] <= m[i];
      in = in || div;
    }
    if (!in) ++count;
  }
  return count;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned min_deg, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(min_deg, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  Monomial m(n);
  for (unsigned k = deg(rng); k > 0; --k) {
    auto v = var(rng);
    m.set(v, m[v] + 1u);
  }
  return m;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens, unsigned max_deg) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Monomial> gens;
  for (std::size_t k = count(rng); k > 0; --k) gens.push_back(random_monomial(rng, n, 1, max_deg));
  return MonomialIdeal::minimalize(n, gens);
}

/// Random polynomial with small integer coefficients.
template <class F>
Polynomial<F> random_polynomial(std::mt19937_64& rng, const RingPtr& ring, const MonomialOrder& ord, std::size_t terms,
                                unsigned max_deg, bool homogeneous = false) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<Term<F>> ts;
  const std::size_t n = ring->nvars();
  for (std::size_t k = 0; k < terms; ++k) {
    int c = coef(rng);
    if (c == 0) c = 1;
    ts.push_back({F(c), random_monomial(rng, n, homogeneous ? max_deg : 0, max_deg)});
  }
  return Polynomial<F>::from_terms(ring, ord, std::move(ts));
}

}  // namespace gin::test
