#include <gtest/gtest.h>

#include "support.hpp"

using namespace upho;

namespace {

// Counts fillings of the shape with entries 1..l(mu) by brute force, keeping
// those with weakly increasing rows, strictly increasing columns and content mu.
long long kostka_oracle(const Partition& lambda, const Partition& mu) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (std::size_t c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) t[r].assign(lambda[r], 0);
  std::vector<std::size_t> used(mu.length(), 0);
  long long count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[i];
    for (std::size_t v = 0; v < mu.length(); ++v) {
      if (used[v] == mu[v]) continue;
      if (c > 0 && t[r][c - 1] > static_cast<int>(v) + 1) continue;
      if (r > 0 && t[r - 1][c] >= static_cast<int>(v) + 1) continue;
      t[r][c] = static_cast<int>(v) + 1;
      ++used[v];
      go(i + 1);
      --used[v];
    }
    t[r][c] = 0;
  };
  go(0);
  return count;
}

PartitionMap coeffs(std::initializer_list<std::pair<Partition, long long>> v) {
  PartitionMap out;
  for (const auto& [p, c] : v) out[p] = c;
  return out;
}

IntSeries series_of(const char* expr, std::size_t order) { return expand_rational(parse_rational(expr), order); }

}  // namespace

TEST(Symfunc, PartitionsReverseLex) {
  std::vector<Partition> expected{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  EXPECT_EQ(partitions(5), expected);
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (std::size_t n = 0; n < counts.size(); ++n) EXPECT_EQ(partitions(n).size(), counts[n]);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto ps = partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        EXPECT_GT(ps[i], ps[j]);
        EXPECT_FALSE(dominates(ps[j], ps[i]) && ps[i] != ps[j]);
      }
  }
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, 0}), Error);
}

TEST(Symfunc, KostkaExamples) {
  EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka({1, 1}, {2}), 0);
  EXPECT_EQ(kostka({3, 2}, {3, 2}), 1);
  EXPECT_THROW(kostka({2}, {1}), Error);
  try {
    kostka({2}, {1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

TEST(Symfunc, KostkaMatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& l : partitions(n))
      for (const auto& m : partitions(n)) EXPECT_EQ(kostka(l, m), kostka_oracle(l, m)) << l.to_string() << m.to_string();
}

TEST(Symfunc, KostkaUnitriangular) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& l : partitions(n))
      for (const auto& m : partitions(n)) {
        const auto k = kostka(l, m);
        if (l == m) EXPECT_EQ(k, 1);
        if (!dominates(l, m)) EXPECT_EQ(k, 0);
        if (dominates(l, m)) EXPECT_GT(k, 0);
      }
}

TEST(Symfunc, EhrenborgMonomial) {
  auto chain3 = ehrenborg_monomial(IntSeries{1, 1, 1, 1}, 3);
  EXPECT_EQ(chain3.coefficients, coeffs({{{3}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}}));
  auto tree2 = ehrenborg_monomial(rgf(k_ary_tree(2, 3)), 2);
  EXPECT_EQ(tree2.coefficients, coeffs({{{2}, 4}, {{1, 1}, 4}}));
  auto grid2 = ehrenborg_monomial(rgf(grid_construction({{1, 2}, 3})), 2);
  EXPECT_EQ(grid2.coefficients, coeffs({{{2}, 6}, {{1, 1}, 16}}));
  EXPECT_THROW(ehrenborg_monomial(IntSeries{1, 2}, 2), Error);
}

TEST(Symfunc, EhrenborgByChainsExamples) {
  auto c = ehrenborg_by_chains(chain(3), 2, 1);
  EXPECT_EQ(c.coefficients, coeffs({{{1}, 1}}));
  auto t = ehrenborg_by_chains(k_ary_tree(2, 3), 2, 2);
  EXPECT_EQ(t.coefficients, coeffs({{{2}, 4}, {{1, 1}, 4}}));
  auto g = grid_construction({{1, 1}, 3});
  EXPECT_EQ(ehrenborg_by_chains(g, 3, 2), ehrenborg_monomial(rgf(g), 2));
  EXPECT_THROW(ehrenborg_by_chains(chain(3), 3, 3), Error);
}

TEST(Symfunc, EhrenborgIdentityOnUphoPosets) {
  std::vector<RankedPoset> ps{chain(6),
                              k_ary_tree(2, 6),
                              grid_construction({{1, 1}, 6}),
                              grid_construction({{1, 2}, 6}),
                              b_construction({{1}, 2, 6}),
                              planar_construction(MergeSchedule::from_counts(3, {{2, 1}, {3, 1}}), 6),
                              monoid_poset(stern_presentation(), 6),
                              theorem12_construction({1}, {2, 3}, 5)};
  for (const auto& p : ps)
    for (std::size_t n = 0; n <= 4; ++n) {
      auto direct = ehrenborg_by_chains(p, n, n);
      EXPECT_EQ(direct, ehrenborg_monomial(rgf(p), n));
    }
}

TEST(Symfunc, NonUphoIsNotSymmetric) {
  // x1^2 x2 counts 3 pairs (rank 2 < rank 3) but x1 x2^2 counts 4 (atom < rank 3).
  auto p = RankedPoset({{0}, {1, 2}, {3, 4}, {5, 6}},
                       {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}, {4, 6}});
  try {
    ehrenborg_by_chains(p, 3, 3);
    ADD_FAILURE() << "accepted an asymmetric poset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(Symfunc, SchurExpandExamples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto s = schur_expand(ehrenborg_monomial(rgf(chain(n + 1)), n));
    EXPECT_EQ(s.coefficients, coeffs({{Partition{static_cast<std::uint32_t>(n)}, 1}}));
  }
  auto t = rgf(k_ary_tree(2, 4));
  EXPECT_EQ(schur_expand(ehrenborg_monomial(t, 2)).coefficients, coeffs({{{2}, 4}}));
  EXPECT_EQ(schur_expand(ehrenborg_monomial(t, 3)).coefficients, coeffs({{{3}, 8}}));
}

TEST(Symfunc, SchurRoundTrip) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      SymmetricFunctionDeg f{n, Basis::Monomial, {}};
      for (const auto& p : partitions(n)) f.set(p, coef(rng));
      EXPECT_EQ(monomial_from_schur(schur_expand(f)), f);
    }
    for (const auto& lambda : partitions(n)) {
      SymmetricFunctionDeg s{n, Basis::Schur, {}};
      s.set(lambda, 1);
      EXPECT_EQ(schur_expand(monomial_from_schur(s)), s);
    }
  }
}

TEST(Symfunc, SchurPositivity) {
  for (const char* e : {"(1+x)/(1-2x)", "(1+x)(1+2x)/(1-x)", "1/(1-3x)", "1/(1-x)"})
    EXPECT_TRUE(is_schur_positive(series_of(e, 6), 6).positive) << e;

  auto tail = is_schur_positive(IntSeries{1, 1, 0, 0, 0}, 4);
  EXPECT_TRUE(tail.positive);
  EXPECT_EQ(schur_expand(ehrenborg_monomial(IntSeries{1, 1, 0}, 2)).coefficients, coeffs({{{1, 1}, 1}}));

  auto bad = is_schur_positive(IntSeries{1, 1, 1, 0, 0}, 4);
  ASSERT_FALSE(bad.positive);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->degree, 3u);
  EXPECT_EQ(bad.witness->lambda, (Partition{1, 1, 1}));
  EXPECT_EQ(bad.witness->coefficient, -1);
}

TEST(Symfunc, FormatSchur) {
  auto s = schur_expand(ehrenborg_monomial(IntSeries{1, 3, 6, 12}, 2));
  EXPECT_EQ(format_schur(s), (std::vector<std::string>{"6 · s[2]", "3 · s[1,1]"}));
}

TEST(Symfunc, Davydov) {
  EXPECT_TRUE(davydov_check(parse_rational("(1+x)(1+2x)/(1-x)")));
  EXPECT_TRUE(davydov_check(parse_rational("(1+3x)/((1-x)(1-2x))")));
  EXPECT_FALSE(davydov_check(parse_rational("1/(1-x+x^2)")));
  EXPECT_FALSE(davydov_check(parse_rational("(1-x)/1")));
  EXPECT_TRUE(davydov_check(parse_rational("(1+x)^3/(1-2x)^2")));
  EXPECT_TRUE(davydov_check(parse_rational("(1-x)(1+x)/(1-x)")));
  EXPECT_FALSE(davydov_check(parse_rational("1/(1-3x+x^2+x^3)")));
  EXPECT_FALSE(davydov_check(parse_rational("1+x+x^2")));
  EXPECT_TRUE(davydov_check(parse_rational("1")));
  EXPECT_THROW(davydov_check(RationalFunction({2, 1}, {1})), Error);
}

TEST(Symfunc, DavydovImpliesTruncatedPositivity) {
  for (const char* e : {"(1+x)(1+2x)/(1-x)", "(1+3x)/((1-x)(1-2x))", "(1+x)^2/(1-3x)", "1/((1-x)(1-2x)(1-3x))",
                        "(1+x)(1+x)(1+4x)", "1/(1-x+x^2)", "(1-x)/1", "1/(1-3x+x^2+x^3)"}) {
    auto f = parse_rational(e);
    if (davydov_check(f)) EXPECT_TRUE(is_schur_positive(expand_rational(f, 6), 6).positive) << e;
  }
}

TEST(Sturm, RootCounts) {
  // (x+1)(x+2)(x-3)
  QPolynomial p(IntPolynomial{-6, -7, 0, 1});
  EXPECT_EQ(count_real_roots_by_sign(p), (std::pair<int, int>{2, 1}));
  QPolynomial q(IntPolynomial{1, 0, 1});
  EXPECT_EQ(count_real_roots_by_sign(q), (std::pair<int, int>{0, 0}));
  QPolynomial sq(IntPolynomial{1, -2, 1});
  EXPECT_EQ(square_free_part(sq).degree(), 1);
  EXPECT_THROW(count_real_roots_by_sign(QPolynomial(IntPolynomial{0, 1})), Error);
}
