#include <gtest/gtest.h>

#include "support.hpp"

using namespace upho;
using namespace upho::testing;

TEST(Isomorphism, FreeMonoidIsBinaryTree) {
  auto r = are_isomorphic(k_ary_tree(2, 4), monoid_poset(MonoidPresentation({"a", "b"}, {}), 4));
  EXPECT_TRUE(r.isomorphic);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.left_digest, r.right_digest);
}

TEST(Isomorphism, DifferentRankSizes) {
  auto r = are_isomorphic(chain(4), k_ary_tree(2, 4));
  EXPECT_FALSE(r.isomorphic);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Isomorphism, SameSizesDifferentShape) {
  auto a = lopsided();
  auto b = RankedPoset({{0}, {1, 2}, {3, 4, 5}}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {1, 4}});
  EXPECT_FALSE(are_isomorphic(a, b).isomorphic);
  EXPECT_FALSE(brute_force_isomorphism(a, b).has_value());
}

TEST(Isomorphism, WitnessIsValid) {
  std::mt19937 rng(7);
  for (const auto& [name, p] : small_corpus()) {
    auto q = relabel(p, random_permutation(p.size(), rng), rng);
    auto r = are_isomorphic(p, q);
    ASSERT_TRUE(r.isomorphic) << name;
    EXPECT_TRUE(is_isomorphism(p, q, *r.witness)) << name;
    EXPECT_EQ(r.left_digest, r.right_digest) << name;
  }
}

TEST(Isomorphism, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(20261016);
  auto corpus = small_corpus();
  corpus.push_back({"grid12_7", grid_construction({{1, 2}, 7})});
  corpus.push_back({"planar3_7", planar_construction(MergeSchedule::from_counts(3, {{2, 1}, {3, 1}}), 7)});
  corpus.push_back({"stern6", monoid_poset(stern_presentation(), 6)});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i].poset;
    const auto digest = canonical_digest(p);
    for (int trial = 0; trial < 100; ++trial) {
      auto q = relabel(p, random_permutation(p.size(), rng), rng);
      ASSERT_EQ(canonical_digest(q), digest) << corpus[i].name;
      auto w = find_isomorphism(q, p);
      ASSERT_TRUE(w.has_value()) << corpus[i].name << " trial " << trial;
      ASSERT_TRUE(is_isomorphism(q, p, *w)) << corpus[i].name;
    }
  }
}

TEST(Isomorphism, AgreesWithExhaustiveMatcher) {
  std::mt19937 rng(99);
  auto corpus = small_corpus();
  std::size_t compared = 0, positive = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ASSERT_LE(corpus[i].poset.size(), 40u) << corpus[i].name;
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto& p = corpus[i].poset;
      auto q = relabel(corpus[j].poset, random_permutation(corpus[j].poset.size(), rng), rng);
      if (p.rank_sizes() != q.rank_sizes()) {
        EXPECT_FALSE(are_isomorphic(p, q).isomorphic);
        continue;
      }
      const bool fast = are_isomorphic(p, q).isomorphic;
      const auto slow = brute_force_isomorphism(p, q);
      EXPECT_EQ(fast, slow.has_value()) << corpus[i].name << " vs " << corpus[j].name;
      if (slow) EXPECT_TRUE(is_isomorphism(p, q, *slow));
      ++compared;
      positive += fast;
    }
  }
  EXPECT_GE(compared, corpus.size());
  EXPECT_LT(positive, compared);
}

TEST(Isomorphism, ReflexiveAndSymmetric) {
  auto corpus = small_corpus();
  for (const auto& [n1, p] : corpus) {
    EXPECT_TRUE(are_isomorphic(p, p).isomorphic) << n1;
    for (const auto& [n2, q] : corpus) EXPECT_EQ(are_isomorphic(p, q).isomorphic, are_isomorphic(q, p).isomorphic);
  }
}

TEST(Isomorphism, MirrorPlanarSchedulesMatch) {
  MergeSchedule left = MergeSchedule::from_counts(3, {{2, 1}});
  MergeSchedule right = left;
  right.events = {{2, 2}};
  right.validate();
  auto a = planar_construction(left, 6), b = planar_construction(right, 6);
  EXPECT_TRUE(are_isomorphic(a, b).isomorphic);
}

TEST(Isomorphism, IsomorphismCheckRejectsBadMaps) {
  auto t = k_ary_tree(2, 3);
  std::vector<Vertex> id{0, 1, 2, 3, 4, 5, 6};
  EXPECT_TRUE(is_isomorphism(t, t, id));
  std::vector<Vertex> swapped_leaf{0, 1, 2, 5, 4, 3, 6};
  EXPECT_FALSE(is_isomorphism(t, t, swapped_leaf));
  std::vector<Vertex> short_map{0, 1};
  EXPECT_FALSE(is_isomorphism(t, t, short_map));
}
