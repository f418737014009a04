#ifndef UPHO_TESTS_SUPPORT_HPP_
#define UPHO_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "upho/upho.hpp"

namespace upho::testing {

struct Named {
  std::string name;
  RankedPoset poset;
};

inline RankedPoset bowtie() {
  return RankedPoset({{0}, {1, 2}, {3, 4}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
}

/// Two atoms; the left one has two children, the right one a single child.
inline RankedPoset lopsided() {
  return RankedPoset({{0}, {1, 2}, {3, 4, 5}}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
}

/// Small posets (at most 40 vertices) used by the isomorphism cross-checks.
inline std::vector<Named> small_corpus() {
  std::vector<Named> out;
  out.push_back({"chain5", chain(5)});
  out.push_back({"tree2_4", k_ary_tree(2, 4)});
  out.push_back({"tree3_3", k_ary_tree(3, 3)});
  out.push_back({"grid11_4", grid_construction({{1, 1}, 4})});
  out.push_back({"grid12_4", grid_construction({{1, 2}, 4})});
  out.push_back({"grid2_5", grid_construction({{2}, 5})});
  out.push_back({"bcons1_2_4", b_construction({{1}, 2, 4})});
  out.push_back({"bcons_3_3", b_construction({{}, 3, 3})});
  out.push_back({"planar3_4", planar_construction(MergeSchedule::from_counts(3, {{2, 1}, {3, 1}}), 4)});
  out.push_back({"planar2_6", planar_construction(MergeSchedule::from_counts(2, {{2, 1}}), 6)});
  out.push_back({"planar4_3a", planar_construction(MergeSchedule::from_counts(4, {{2, 2}}), 3)});
  out.push_back({"stern4", monoid_poset(stern_presentation(), 4)});
  out.push_back({"sfam2_5", monoid_poset(s_family({2}), 5)});
  out.push_back({"free2_4", monoid_poset(MonoidPresentation({"a", "b"}, {}), 4)});
  out.push_back({"chainxchain", product(chain(4), chain(4), 4)});
  out.push_back({"treextree", product(k_ary_tree(2, 3), k_ary_tree(3, 3), 3)});
  out.push_back({"bowtie", bowtie()});
  out.push_back({"lopsided", lopsided()});
  out.push_back({"right_absorbing", monoid_poset(MonoidPresentation({"a", "b"}, {{{0, 1}, {1, 1}}}), 4)});
  out.push_back({"left_absorbing", monoid_poset(MonoidPresentation({"a", "b"}, {{{1, 0}, {1, 1}}}), 4)});
  return out;
}

/// Renumbers vertices by `perm` (old id -> new id) and shuffles rank listings.
inline RankedPoset relabel(const RankedPoset& p, const std::vector<Vertex>& perm, std::mt19937& rng) {
  std::vector<Rank> ranks;
  for (const auto& r : p.ranks()) {
    Rank nr;
    for (Vertex v : r) nr.push_back(perm[v]);
    std::shuffle(nr.begin(), nr.end(), rng);
    ranks.push_back(std::move(nr));
  }
  std::vector<Cover> covers;
  for (const auto& [u, v] : p.covers()) covers.emplace_back(perm[u], perm[v]);
  std::shuffle(covers.begin(), covers.end(), rng);
  std::optional<Embedding> emb;
  if (p.has_embedding()) {
    emb.emplace();
    for (const auto& r : p.embedding()) {
      Rank nr;
      for (Vertex v : r) nr.push_back(perm[v]);
      emb->push_back(std::move(nr));
    }
  }
  return RankedPoset(std::move(ranks), std::move(covers), std::move(emb));
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Exhaustive matcher: assigns vertices in id order to unused vertices of the
/// same rank, checking covers against every earlier assignment.
inline std::optional<std::vector<Vertex>> brute_force_isomorphism(const RankedPoset& p, const RankedPoset& q) {
  if (p.rank_sizes() != q.rank_sizes()) return std::nullopt;
  const std::size_t n = p.size();
  std::set<Cover> pc, qc;
  for (const auto& c : p.covers()) pc.insert(c);
  for (const auto& c : q.covers()) qc.insert(c);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return p.rank_of(a) < p.rank_of(b); });
  std::vector<Vertex> f(n, static_cast<Vertex>(-1));
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    const Vertex v = order[i];
    for (Vertex w : q.rank(p.rank_of(v))) {
      if (used[w]) continue;
      if (p.up(v).size() != q.up(w).size() || p.down(v).size() != q.down(w).size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex u = order[j];
        ok = pc.count({u, v}) == qc.count({f[u], w}) && pc.count({v, u}) == qc.count({w, f[u]});
      }
      if (!ok) continue;
      f[v] = w;
      used[w] = 1;
      if (go(i + 1)) return true;
      used[w] = 0;
    }
    f[v] = static_cast<Vertex>(-1);
    return false;
  };
  if (!go(0)) return std::nullopt;
  return f;
}

/// Comparability by explicit upward search.
inline bool leq(const RankedPoset& p, Vertex u, Vertex v) {
  if (u == v) return true;
  if (p.rank_of(u) >= p.rank_of(v)) return false;
  for (Vertex w : p.up(u))
    if (leq(p, w, v)) return true;
  return false;
}

}  // namespace upho::testing

#endif  // UPHO_TESTS_SUPPORT_HPP_
