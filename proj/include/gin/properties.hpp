// Classification of monomial ideals: lexsegment, weakly reverse
// lexicographic, and Borel-fixed (combinatorial criterion and a direct check
// of the group action).
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gin/field.hpp"
#include "gin/linalg.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/order.hpp"

namespace gin {

/// `member` lies in the ideal, `missing` does not; for the order-based
/// properties both have the same degree and `missing` is the larger one.
struct Witness {
  Monomial member;
  Monomial missing;
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<Witness> witness;

  static PropertyVerdict pass() { return {}; }
  static PropertyVerdict fail(Monomial member, Monomial missing) {
    return {false, Witness{std::move(member), std::move(missing)}};
  }
};

/// Every graded piece up to maxdeg(J) must be a descending-lex prefix of that
/// degree's monomials. Higher degrees follow: x_1..x_n times a lex segment
/// is again a lex segment.
inline PropertyVerdict is_lexsegment(const MonomialIdeal& J) {
  if (J.is_zero()) return PropertyVerdict::pass();
  const auto n = J.nvars();
  for (unsigned d = 0; d <= J.maxdeg(); ++d) {
    std::optional<Monomial> first_gap;
    std::optional<Monomial> late_member;
    for_each_monomial_desc_lex(n, d, [&](const Monomial& m) {
      if (!J.contains(m)) {
        if (!first_gap) first_gap = m;
      } else if (first_gap) {
        late_member = m;
        return false;
      }
      return true;
    });
    if (late_member) return PropertyVerdict::fail(*late_member, *first_gap);
  }
  return PropertyVerdict::pass();
}

/// Degree-d monomials sorted descending under degrevlex.
inline std::vector<Monomial> monomials_desc_degrevlex(std::size_t n, unsigned d) {
  auto ms = monomials_of_degree(n, d);
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return detail::compare_full(OrderKind::degrevlex, a, b) > 0;
  });
  return ms;
}

/// For every minimal generator m, every same-degree monomial above m in
/// reverse lexicographic order must belong to J.
inline PropertyVerdict is_weakly_revlex(const MonomialIdeal& J) {
  std::unordered_map<unsigned, std::vector<Monomial>> by_degree;
  for (const auto& g : J.generators()) {
    auto [it, fresh] = by_degree.try_emplace(g.degree());
    if (fresh) it->second = monomials_desc_degrevlex(J.nvars(), g.degree());
    for (const auto& m : it->second) {
      if (m == g) break;
      if (!J.contains(m)) return PropertyVerdict::fail(g, m);
    }
  }
  return PropertyVerdict::pass();
}

/// Combinatorial Borel-fixedness in characteristic p: for each generator m
/// with x_j-exponent exactly t > 0, every i < j and 1 <= s <= t with
/// binom(t, s) nonzero mod p, the monomial (x_i / x_j)^s m lies in J.
inline PropertyVerdict is_borel_fixed(const MonomialIdeal& J, std::uint64_t p) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime, got " + std::to_string(p));
  const auto n = J.nvars();
  for (const auto& m : J.generators()) {
    for (std::size_t j = 1; j < n; ++j) {
      const unsigned t = m[j];
      for (unsigned s = 1; s <= t; ++s) {
        if (!binom_p_leq(s, t, p)) continue;
        for (std::size_t i = 0; i < j; ++i) {
          Monomial shifted = m;
          shifted.set(j, t - s);
          shifted.set(i, m[i] + s);
          if (!J.contains(shifted)) return PropertyVerdict::fail(m, shifted);
        }
      }
    }
  }
  return PropertyVerdict::pass();
}

/// Applies the elementary upper-triangular substitution x_j -> x_j + c x_i
/// (i < j, 0-based) to J and checks over Q, degree by degree up to D, that the
/// images of J_d span exactly J_d.
inline bool borel_action_check(const MonomialIdeal& J, std::size_t i, std::size_t j, const Rational& c, unsigned D) {
  if (i >= j) throw std::invalid_argument("borel_action_check requires i < j");
  if (j >= J.nvars()) throw DimensionMismatch("variable index out of range");
  if (c.is_zero()) throw std::invalid_argument("borel_action_check requires c != 0");
  if (!J.is_zero() && D < J.maxdeg()) throw std::invalid_argument("horizon below maxdeg");
  const auto n = J.nvars();
  for (unsigned d = 0; d <= D; ++d) {
    auto all = monomials_of_degree(n, d);
    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    for (std::size_t k = 0; k < all.size(); ++k) column.emplace(all[k], k);
    std::vector<std::vector<Rational>> rows;
    std::size_t members = 0;
    for (const auto& m : all) {
      if (!J.contains(m)) continue;
      ++members;
      std::vector<Rational> unit(all.size(), Rational(0));
      unit[column.at(m)] = Rational(1);
      rows.push_back(std::move(unit));
    }
    if (members == 0) continue;
    for (const auto& m : all) {
      if (!J.contains(m)) continue;
      // (x_j + c x_i)^e expanded binomially.
      std::vector<Rational> image(all.size(), Rational(0));
      const unsigned e = m[j];
      Rational cs(1);
      for (unsigned s = 0; s <= e; ++s) {
        Monomial term = m;
        term.set(j, e - s);
        term.set(i, m[i] + s);
        image[column.at(term)] += Rational(binomial(e, s)) * cs;
        cs *= c;
      }
      rows.push_back(std::move(image));
    }
    if (row_rank(std::move(rows), all.size()) != members) return false;
  }
  return true;
}

}  // namespace gin
