#include <gtest/gtest.h>

#include <random>

#include "gin/properties.hpp"
#include "gin/series.hpp"
#include "test_util.hpp"

using namespace gin;
using gin::test::ideal;

namespace {

SeriesWindow window(std::vector<std::int64_t> c) { return SeriesWindow{std::move(c), std::nullopt}; }

/// 1, 3, 4, 4, ... up to D.
SeriesWindow replay_hf(std::size_t D) {
  std::vector<std::int64_t> c{1, 3};
  while (c.size() <= D) c.push_back(4);
  return window(c);
}

SeriesWindow padded(std::vector<std::int64_t> c, std::size_t D) {
  c.resize(D + 1, 0);
  return window(std::move(c));
}

/// Coefficients of prod (1 - t^d) / (1 - t)^n by repeated series division,
/// independent of the closed-form expansion.
std::vector<std::int64_t> naive_expansion(std::size_t n, const std::vector<unsigned>& degrees, std::size_t D) {
  std::vector<std::int64_t> s(D + 1, 0);
  s[0] = 1;
  for (unsigned d : degrees)
    for (std::size_t k = D + 1; k-- > 0;)
      if (k >= d) s[k] -= s[k - d];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 1; k <= D; ++k) s[k] += s[k - 1];
  return s;
}

}  // namespace

TEST(BracketTruncate, Examples) {
  EXPECT_EQ(bracket_truncate(window({1, 2, 0, -2, -1})).coeffs, (std::vector<std::int64_t>{1, 2, 0, 0, 0}));
  EXPECT_EQ(bracket_truncate(window({1, 3, 6, 10})).coeffs, (std::vector<std::int64_t>{1, 3, 6, 10}));
  EXPECT_EQ(bracket_truncate(window({0, 3, 6})).coeffs, (std::vector<std::int64_t>{0, 0, 0}));
  auto once = bracket_truncate(window({1, 2, -1, 5, 3}));
  EXPECT_EQ(bracket_truncate(once), once);
}

TEST(FroebergSeries, Examples) {
  EXPECT_EQ(froeberg_series({3, {2, 2}, 5}).coeffs, (std::vector<std::int64_t>{1, 3, 4, 4, 4, 4}));
  EXPECT_EQ(froeberg_series({3, {2, 2, 2}, 5}).coeffs, (std::vector<std::int64_t>{1, 3, 3, 1, 0, 0}));
  EXPECT_EQ(froeberg_series({2, {2, 2, 2}, 4}).coeffs, (std::vector<std::int64_t>{1, 2, 0, 0, 0}));
}

TEST(FroebergSeries, MatchesNaiveExpansionAndBracket) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& ds : std::vector<std::vector<unsigned>>{{2}, {2, 3}, {3, 3, 3}, {2, 2, 2, 2}, {4, 2, 3, 2, 2}}) {
      auto raw = naive_expansion(n, ds, 14);
      bool dead = false;
      for (auto& c : raw) {
        dead = dead || c <= 0;
        if (dead) c = 0;
      }
      EXPECT_EQ(froeberg_series({n, ds, 14}).coeffs, raw);
    }
}

TEST(FroebergSeries, RegularSequenceCaseIsPositive) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t s = 0; s <= n; ++s)
      for (unsigned d = 1; d <= 3; ++d) {
        std::vector<unsigned> ds(s, d);
        auto w = froeberg_series({n, ds, 20});
        if (s < n)
          for (auto c : w.coeffs) EXPECT_GT(c, 0) << n << " " << s << " " << d;
        else
          // Complete intersection: positive exactly up to the socle degree.
          for (std::size_t k = 0; k <= s * (d - 1); ++k) EXPECT_GT(w.coeffs[k], 0);
      }
}

TEST(LexsegmentOfHf, Examples) {
  auto a = lexsegment_of_hf(3, replay_hf(9), 9);
  EXPECT_EQ(a.ideal, ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 2}, {0, 4, 0}}));
  EXPECT_FALSE(a.horizon_uncertain);

  auto b = lexsegment_of_hf(3, padded({1, 3, 3, 1}, 8), 8);
  EXPECT_EQ(b.ideal, ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 4}}));
  EXPECT_EQ(hilbert_series(b.ideal, 8).coeffs, padded({1, 3, 3, 1}, 8).coeffs);

  auto c = lexsegment_of_hf(2, padded({1, 2, 1}, 6), 6);
  EXPECT_EQ(c.ideal, ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
}

TEST(LexsegmentOfHf, Inadmissible) {
  // Growth from 1 to 3 in degree 2 is impossible in two variables.
  EXPECT_THROW(lexsegment_of_hf(2, padded({1, 1, 3}, 4), 4), Inadmissible);
  // Beyond Macaulay's bound: h_1 = 2, h_2 = 3 allowed, h_3 = 5 is not.
  EXPECT_THROW(lexsegment_of_hf(3, padded({1, 2, 3, 5}, 5), 5), Inadmissible);
  EXPECT_THROW(lexsegment_of_hf(3, padded({1, 4}, 3), 3), Inadmissible);
}

TEST(LexsegmentOfHf, HorizonUncertainty) {
  auto short_window = lexsegment_of_hf(3, replay_hf(5), 5);
  EXPECT_TRUE(short_window.horizon_uncertain);
  auto widened = lexsegment_of_froeberg(3, {2, 2});
  EXPECT_FALSE(widened.horizon_uncertain);
  EXPECT_EQ(widened.ideal, ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 2}, {0, 4, 0}}));
}

TEST(MaxgbdegBound, Examples) {
  EXPECT_EQ(maxgbdeg_bound(3, replay_hf(9), 9), 4u);
  EXPECT_EQ(maxgbdeg_bound(3, padded({1, 3, 3, 1}, 8), 8), 4u);
  EXPECT_EQ(maxgbdeg_bound(2, padded({1, 2, 1}, 6), 6), 3u);
}

class SeriesProperties : public ::testing::TestWithParam<int> {};

TEST_P(SeriesProperties, LexsegmentConstructionPassesItsOwnCheck) {
  std::mt19937_64 rng(404 + GetParam());
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  for (int k = 0; k < 20; ++k) {
    auto n = nvars(rng);
    auto J = test::random_ideal(rng, n, 5, 4);
    auto L = lexsegment_of_ideal(J);
    EXPECT_TRUE(is_lexsegment(L.ideal).holds) << J.to_string();
    auto D = L.horizon;
    EXPECT_EQ(hilbert_series(L.ideal, D), hilbert_series(J, D));
  }
}

TEST_P(SeriesProperties, LexsegmentHasAtLeastAsManyGeneratorsPerDegree) {
  std::mt19937_64 rng(808 + GetParam());
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  for (int k = 0; k < 20; ++k) {
    auto n = nvars(rng);
    auto J = test::random_ideal(rng, n, 6, 5);
    auto L = lexsegment_of_ideal(J);
    ASSERT_FALSE(L.horizon_uncertain);
    auto top = std::max(J.maxdeg(), L.ideal.maxdeg());
    auto lc = L.ideal.generator_counts(top), jc = J.generator_counts(top);
    for (unsigned d = 0; d <= top; ++d) EXPECT_GE(lc[d], jc[d]) << J.to_string() << " degree " << d;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeriesProperties, ::testing::Range(0, 3));
