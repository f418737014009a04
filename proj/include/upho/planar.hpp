#ifndef UPHO_PLANAR_HPP_
#define UPHO_PLANAR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upho/error.hpp"
#include "upho/poset.hpp"

namespace upho {

/// One root-bifurcation: at `rank`, merge above atoms `pair` and `pair`+1
/// (1-based, counted from the left).
struct MergeEvent {
  std::size_t rank = 0;
  std::uint32_t pair = 0;
  friend auto operator<=>(const MergeEvent&, const MergeEvent&) = default;
};

/// Up-degree b plus the ranks at which root-bifurcated vertices appear.
struct MergeSchedule {
  std::uint32_t b = 1;
  std::map<std::size_t, std::uint32_t> a;
  std::vector<MergeEvent> events;

  /// Assigns atom-pair indices left to right in increasing rank order.
  static MergeSchedule from_counts(std::uint32_t b, const std::map<std::size_t, std::uint32_t>& a) {
    MergeSchedule s;
    s.b = b;
    std::uint32_t next = 1;
    for (const auto& [rank, count] : a) {
      if (count == 0) continue;
      s.a[rank] = count;
      for (std::uint32_t k = 0; k < count; ++k) s.events.push_back({rank, next++});
    }
    s.validate();
    return s;
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [rank, count] : a) sum += count;
    return sum;
  }

  void validate() const {
    auto bad = [](const std::string& why) { throw Error(ErrorCode::ScheduleInvalid, why); };
    if (b < 1) bad("up-degree b must be at least 1");
    std::map<std::size_t, std::uint32_t> seen;
    for (const auto& [rank, count] : a) {
      if (count == 0) continue;
      if (rank == 1) bad("a_1 must be 0: a rank-1 vertex covers only the minimum");
      if (rank == 0) bad("rank 0 cannot hold root-bifurcated vertices");
    }
    if (total() > b - 1)
      bad("sum of a_i is " + std::to_string(total()) + ", at most b-1 = " + std::to_string(b - 1) +
          " allowed");
    std::set<std::uint32_t> pairs;
    for (std::size_t k = 0; k < events.size(); ++k) {
      const auto& e = events[k];
      if (k > 0 && !(events[k - 1] < e)) bad("events must be sorted by rank, then pair index");
      if (e.pair < 1 || e.pair > b - 1) bad("pair index " + std::to_string(e.pair) + " out of range");
      if (!pairs.insert(e.pair).second) bad("duplicate pair index " + std::to_string(e.pair));
      ++seen[e.rank];
    }
    std::map<std::size_t, std::uint32_t> expected;
    for (const auto& [rank, count] : a)
      if (count) expected[rank] = count;
    if (seen != expected) bad("events do not match the per-rank counts");
  }

  /// Q(x) = 1 - b x + sum a_i x^i, as coefficients.
  std::vector<long long> q_coefficients() const {
    std::size_t top = 1;
    for (const auto& [rank, count] : a) top = std::max(top, rank);
    std::vector<long long> q(top + 1, 0);
    q[0] = 1;
    q[1] = -static_cast<long long>(b);
    for (const auto& [rank, count] : a) q[rank] += count;
    return q;
  }
};

namespace detail {

enum class MergeOrder { DeepestFirst, ShallowestFirst };

inline RankedPoset planar_construction(const MergeSchedule& schedule, std::size_t depth,
                                       MergeOrder order) {
  schedule.validate();
  if (depth < 1) throw Error(ErrorCode::InsufficientDepth, "depth must be at least 1");
  const std::uint32_t b = schedule.b;

  std::vector<std::size_t> sizes{1};
  // children[k][x]: local indices at rank k+1 covering vertex x of rank k.
  std::vector<std::vector<std::vector<std::uint32_t>>> children;
  std::vector<LocalCovers> layers;

  auto extreme = [&](std::size_t from_rank, std::uint32_t x, std::size_t to_rank, bool right) {
    for (std::size_t k = from_rank; k < to_rank; ++k)
      x = right ? children[k][x].back() : children[k][x].front();
    return x;
  };

  for (std::size_t i = 1; i < depth; ++i) {
    const std::size_t prev = sizes.back();
    const std::size_t slots = prev * b;
    // partner[t] = t+1 when tentative slots t and t+1 become one vertex.
    std::vector<char> merged_right(slots, 0), touched(slots, 0);

    std::vector<MergeEvent> events;
    for (const auto& e : schedule.events)
      if (e.rank <= i) events.push_back(e);
    // Deepest ancestors first means largest r = i - j first.
    std::stable_sort(events.begin(), events.end(), [order](const MergeEvent& l, const MergeEvent& r) {
      return order == MergeOrder::DeepestFirst ? l.rank > r.rank : l.rank < r.rank;
    });

    for (const auto& e : events) {
      const std::size_t j = i - e.rank;
      for (std::uint32_t v = 0; v < sizes[j]; ++v) {
        const auto& kids = children[j][v];
        std::uint32_t left = extreme(j + 1, kids[e.pair - 1], i - 1, /*right=*/true);
        std::uint32_t right = extreme(j + 1, kids[e.pair], i - 1, /*right=*/false);
        if (right != left + 1)
          throw Error(ErrorCode::StructureError, "merge boundary vertices are not adjacent");
        const std::size_t t = static_cast<std::size_t>(left) * b + (b - 1);
        if (touched[t] || touched[t + 1])
          throw Error(ErrorCode::StructureError, "tentative vertex merged twice");
        touched[t] = touched[t + 1] = 1;
        merged_right[t] = 1;
      }
    }

    std::vector<std::uint32_t> slot_vertex(slots);
    std::uint32_t next = 0;
    for (std::size_t t = 0; t < slots; ++t) {
      slot_vertex[t] = next;
      if (!merged_right[t]) ++next;
    }
    sizes.push_back(next);
    std::vector<std::vector<std::uint32_t>> kids(prev);
    LocalCovers layer;
    for (std::uint32_t x = 0; x < prev; ++x)
      for (std::uint32_t c = 0; c < b; ++c) {
        auto y = slot_vertex[static_cast<std::size_t>(x) * b + c];
        kids[x].push_back(y);
        layer.emplace_back(x, y);
      }
    children.push_back(std::move(kids));
    layers.push_back(std::move(layer));
  }
  return build_layered(sizes, layers, /*embed=*/true);
}

}  // namespace detail

/// Builds rank i by giving every rank-(i-1) vertex b ordered children, then
/// for each vertex v at rank j = i - r and each event (r, p) merging the two
/// tentative children that straddle the boundary between the subtrees above
/// children p and p+1 of v.  The result carries its planar layout.
inline RankedPoset planar_construction(const MergeSchedule& schedule, std::size_t depth) {
  return detail::planar_construction(schedule, depth, detail::MergeOrder::DeepestFirst);
}

/// Two cover edges drawn between the same pair of ranks that cross.
struct Crossing {
  Cover first;
  Cover second;
};

/// Edges (u, v) and (u', v') between the same ranks cross iff
/// pos(u) < pos(u') and pos(v) > pos(v').  Empty result means the layout is
/// planar.
inline std::vector<Crossing> check_embedding(const RankedPoset& p) {
  if (!p.has_embedding()) throw Error(ErrorCode::MissingEmbedding, "poset has no embedding");
  std::vector<Crossing> out;
  for (std::size_t k = 0; k + 1 < p.depth(); ++k) {
    std::vector<Cover> edges;
    for (Vertex u : p.ordered_rank(k))
      for (Vertex v : p.up(u)) edges.emplace_back(u, v);
    for (std::size_t x = 0; x < edges.size(); ++x)
      for (std::size_t y = x + 1; y < edges.size(); ++y) {
        const auto& [u1, v1] = edges[x];
        const auto& [u2, v2] = edges[y];
        const auto pu1 = p.position(u1), pu2 = p.position(u2);
        const auto pv1 = p.position(v1), pv2 = p.position(v2);
        if ((pu1 < pu2 && pv1 > pv2) || (pu2 < pu1 && pv2 > pv1)) out.push_back({edges[x], edges[y]});
      }
  }
  return out;
}

/// Rebinds `p` to a new left-to-right layout.
inline RankedPoset with_embedding(const RankedPoset& p, Embedding embedding) {
  return RankedPoset(p.ranks(), p.covers(), std::move(embedding));
}

namespace detail {

class EmbeddingSearch {
 public:
  explicit EmbeddingSearch(const RankedPoset& p) : p_(p), pos_(p.size(), 0), used_(p.size(), 0) {}

  std::optional<Embedding> run() {
    order_.assign(p_.depth(), {});
    if (place(0, 0, 0)) return order_;
    return std::nullopt;
  }

 private:
  // Fills rank k left to right.  A vertex may follow the placed ones iff its
  // leftmost lower neighbour is not left of any lower neighbour of theirs.
  bool place(std::size_t k, std::size_t idx, std::size_t bound) {
    const auto& rank = p_.rank(k);
    if (idx == rank.size()) return k + 1 == p_.depth() || place(k + 1, 0, 0);
    std::vector<Vertex> candidates(rank.begin(), rank.end());
    std::sort(candidates.begin(), candidates.end());
    for (Vertex w : candidates) {
      if (used_[w]) continue;
      std::size_t lo = static_cast<std::size_t>(-1), hi = 0;
      for (Vertex u : p_.down(w)) {
        lo = std::min(lo, pos_[u]);
        hi = std::max(hi, pos_[u]);
      }
      if (p_.down(w).empty()) lo = hi = bound;
      if (lo < bound) continue;
      used_[w] = 1;
      pos_[w] = idx;
      order_[k].push_back(w);
      if (place(k, idx + 1, std::max(bound, hi))) return true;
      order_[k].pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const RankedPoset& p_;
  std::vector<std::size_t> pos_;
  std::vector<char> used_;
  Embedding order_;
};

}  // namespace detail

/// Exhaustive search for a crossing-free layout, rank by rank.  Exponential
/// in the worst case; ranks wider than `width_cap` are refused.
inline std::optional<Embedding> find_embedding(const RankedPoset& p, std::size_t width_cap = 10) {
  for (std::size_t k = 0; k < p.depth(); ++k)
    if (p.rank(k).size() > width_cap)
      throw Error(ErrorCode::WidthLimitExceeded, "rank " + std::to_string(k) + " has " +
                                                     std::to_string(p.rank(k).size()) +
                                                     " vertices, cap is " + std::to_string(width_cap));
  return detail::EmbeddingSearch(p).run();
}

/// A down-degree-2 vertex, the two vertices it covers, and their meet.
struct MergeVertex {
  Vertex vertex;
  Vertex left;
  Vertex right;
  Vertex meet;
  bool root_bifurcated;
};

struct MergeClassification {
  std::vector<std::size_t> root_bifurcated;  // per rank
  std::vector<std::size_t> bifurcated;       // per rank
  std::vector<MergeVertex> merges;

  std::size_t total_root_bifurcated() const {
    return std::accumulate(root_bifurcated.begin(), root_bifurcated.end(), std::size_t{0});
  }
};

/// Splits down-degree-2 vertices by whether the two covered vertices meet at
/// the minimum.  Down-degree above 2, or a missing or non-unique meet, is a
/// structure error.
inline MergeClassification classify_merges(const RankedPoset& p) {
  if (!unique_min_check(p))
    throw Error(ErrorCode::StructureError, "poset lacks a unique minimum");
  const Vertex root = p.rank(0).front();
  MergeClassification out;
  out.root_bifurcated.assign(p.depth(), 0);
  out.bifurcated.assign(p.depth(), 0);
  for (std::size_t k = 0; k < p.depth(); ++k) {
    for (Vertex v : p.ordered_rank(k)) {
      const auto below = p.down(v);
      if (below.size() > 2)
        throw Error(ErrorCode::StructureError,
                    "vertex " + std::to_string(v) + " covers " + std::to_string(below.size()) +
                        " vertices");
      if (below.size() < 2) continue;
      auto m = meet(p, below[0], below[1]);
      if (!std::holds_alternative<Vertex>(m))
        throw Error(ErrorCode::StructureError,
                    "vertices covered by " + std::to_string(v) + " have no unique meet");
      const Vertex w = std::get<Vertex>(m);
      const bool at_root = w == root;
      (at_root ? out.root_bifurcated : out.bifurcated)[k] += 1;
      out.merges.push_back({v, below[0], below[1], w, at_root});
    }
  }
  return out;
}

/// Checks r_i = b r_{i-1} - sum_{k=1..i} a_k r_{i-k} at every rank, with a_k
/// the observed root-bifurcated counts and b the up-degree.
inline bool planar_rgf_check(const RankedPoset& p) {
  const auto classes = classify_merges(p);
  const std::size_t b = p.up(p.rank(0).front()).size();
  for (std::size_t k = 0; k + 1 < p.depth(); ++k)
    for (Vertex v : p.rank(k))
      if (p.up(v).size() != b)
        throw Error(ErrorCode::StructureError,
                    "vertex " + std::to_string(v) + " has up-degree " +
                        std::to_string(p.up(v).size()) + ", expected " + std::to_string(b));
  const auto r = p.rank_sizes();
  const auto& a = classes.root_bifurcated;
  for (std::size_t i = 1; i < r.size(); ++i) {
    long long expected = static_cast<long long>(b * r[i - 1]);
    for (std::size_t k = 1; k <= i; ++k) expected -= static_cast<long long>(a[k] * r[i - k]);
    if (expected != static_cast<long long>(r[i])) return false;
  }
  return true;
}

}  // namespace upho

#endif  // UPHO_PLANAR_HPP_
