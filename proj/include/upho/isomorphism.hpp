#ifndef UPHO_ISOMORPHISM_HPP_
#define UPHO_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "upho/poset.hpp"

namespace upho {

/// Outcome of a graded isomorphism test.
struct IsoReport {
  bool isomorphic = false;
  /// witness[v] is the image in the right poset of left vertex v.
  std::optional<std::vector<Vertex>> witness;
  /// Refinement digests: equal for isomorphic posets, so usable as hash keys.
  std::string left_digest;
  std::string right_digest;
};

namespace detail {

// Cover graph of one poset, or of the disjoint union of two (left vertices
// first).  Colors are seeded by rank and refined by counting up- and
// down-neighbours inside each splitter cell.
struct ColorGraph {
  std::vector<std::vector<std::uint32_t>> up;
  std::vector<std::vector<std::uint32_t>> down;
  std::vector<std::size_t> rank;
  std::size_t left_size = 0;

  void append(const RankedPoset& p) {
    const auto offset = static_cast<std::uint32_t>(up.size());
    for (Vertex v = 0; v < p.size(); ++v) {
      std::vector<std::uint32_t> u, d;
      for (Vertex w : p.up(v)) u.push_back(w + offset);
      for (Vertex w : p.down(v)) d.push_back(w + offset);
      up.push_back(std::move(u));
      down.push_back(std::move(d));
      rank.push_back(p.rank_of(v));
    }
  }
  std::size_t size() const { return up.size(); }
  bool is_left(std::uint32_t v) const { return v < left_size; }
};

// Ordered partition with contiguous cells, nauty style.
struct Partition {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;
  std::vector<std::uint32_t> begin;
  std::vector<std::uint32_t> end;
  std::vector<char> queued;
  std::deque<std::uint32_t> queue;

  std::uint32_t cell_size(std::uint32_t c) const { return end[c] - begin[c]; }
  std::size_t cell_count() const { return begin.size(); }

  void enqueue(std::uint32_t c) {
    if (!queued[c]) {
      queued[c] = 1;
      queue.push_back(c);
    }
  }

  std::uint32_t add_cell(std::uint32_t b, std::uint32_t e) {
    auto id = static_cast<std::uint32_t>(begin.size());
    begin.push_back(b);
    end.push_back(e);
    queued.push_back(0);
    return id;
  }
};

class Refiner {
 public:
  explicit Refiner(const ColorGraph& g) : g_(g), count_(g.size(), 0) {}

  Partition rank_partition() const {
    Partition pt;
    const auto n = static_cast<std::uint32_t>(g_.size());
    std::size_t max_rank = 0;
    for (auto r : g_.rank) max_rank = std::max(max_rank, r);
    std::vector<std::vector<std::uint32_t>> by_rank(max_rank + 1);
    for (std::uint32_t v = 0; v < n; ++v) by_rank[g_.rank[v]].push_back(v);
    pt.pos.assign(n, 0);
    pt.cell.assign(n, 0);
    for (const auto& row : by_rank) {
      if (row.empty()) continue;
      auto b = static_cast<std::uint32_t>(pt.elems.size());
      for (auto v : row) {
        pt.pos[v] = static_cast<std::uint32_t>(pt.elems.size());
        pt.elems.push_back(v);
      }
      auto c = pt.add_cell(b, static_cast<std::uint32_t>(pt.elems.size()));
      for (auto v : row) pt.cell[v] = c;
      pt.enqueue(c);
    }
    return pt;
  }

  /// Refines to the coarsest equitable partition.  When `balanced`, returns
  /// false as soon as some cell holds unequal numbers of left and right
  /// vertices.
  bool refine(Partition& pt, bool balanced) {
    while (!pt.queue.empty()) {
      std::uint32_t c = pt.queue.front();
      pt.queue.pop_front();
      pt.queued[c] = 0;
      splitter_.assign(pt.elems.begin() + pt.begin[c], pt.elems.begin() + pt.end[c]);
      if (!split_by(pt, /*upward=*/true, balanced)) return false;
      if (!split_by(pt, /*upward=*/false, balanced)) return false;
    }
    return true;
  }

  /// Moves v into a new singleton cell (w too, for a paired search step).
  void individualize(Partition& pt, std::uint32_t v, std::optional<std::uint32_t> w) {
    std::uint32_t c = pt.cell[v];
    std::uint32_t last = pt.end[c] - 1;
    std::vector<std::uint32_t> moving{v};
    if (w) moving.push_back(*w);
    for (auto x : moving) {
      std::uint32_t px = pt.pos[x];
      std::uint32_t y = pt.elems[last];
      std::swap(pt.elems[px], pt.elems[last]);
      pt.pos[y] = px;
      pt.pos[x] = last;
      --last;
    }
    std::uint32_t nc = pt.add_cell(last + 1, pt.end[c]);
    pt.end[c] = last + 1;
    for (auto x : moving) pt.cell[x] = nc;
    pt.enqueue(nc);
    pt.enqueue(c);
  }

 private:
  bool split_by(Partition& pt, bool upward, bool balanced) {
    // count_[u] = number of neighbours of u inside the splitter, where the
    // neighbour sits above u (upward) or below u.
    touched_.clear();
    for (auto w : splitter_) {
      const auto& nbrs = upward ? g_.down[w] : g_.up[w];
      for (auto u : nbrs) {
        if (count_[u]++ == 0) touched_.push_back(u);
      }
    }
    cells_.clear();
    for (auto u : touched_) cells_.push_back(pt.cell[u]);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    bool ok = true;
    for (auto c : cells_) {
      if (pt.cell_size(c) > 1 && !split_cell(pt, c, balanced)) {
        ok = false;
        break;
      }
    }
    for (auto u : touched_) count_[u] = 0;
    return ok;
  }

  bool split_cell(Partition& pt, std::uint32_t c, bool balanced) {
    auto first = pt.elems.begin() + pt.begin[c];
    auto last = pt.elems.begin() + pt.end[c];
    auto [lo, hi] = std::minmax_element(first, last, [this](std::uint32_t a, std::uint32_t b) {
      return count_[a] < count_[b];
    });
    if (count_[*lo] == count_[*hi]) return true;
    std::sort(first, last, [this](std::uint32_t a, std::uint32_t b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    const std::uint32_t b0 = pt.begin[c];
    const std::uint32_t e0 = pt.end[c];
    for (std::uint32_t i = b0; i < e0; ++i) pt.pos[pt.elems[i]] = i;
    std::uint32_t start = b0;
    bool first_fragment = true;
    while (start < e0) {
      std::uint32_t stop = start + 1;
      while (stop < e0 && count_[pt.elems[stop]] == count_[pt.elems[start]]) ++stop;
      std::uint32_t id;
      if (first_fragment) {
        id = c;
        pt.end[c] = stop;
        first_fragment = false;
      } else {
        id = pt.add_cell(start, stop);
        for (std::uint32_t i = start; i < stop; ++i) pt.cell[pt.elems[i]] = id;
      }
      if (balanced) {
        std::uint32_t left = 0;
        for (std::uint32_t i = start; i < stop; ++i) left += g_.is_left(pt.elems[i]) ? 1 : 0;
        if (2 * left != stop - start) return false;
      }
      pt.enqueue(id);
      start = stop;
    }
    return true;
  }

  const ColorGraph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> splitter_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> cells_;
};

inline std::string fnv1a_hex(const std::vector<std::uint64_t>& words) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words)
    for (int i = 0; i < 8; ++i) {
      h ^= (w >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline bool search(const ColorGraph& g, Refiner& refiner, Partition pt,
                   std::vector<Vertex>& witness) {
  if (!refiner.refine(pt, /*balanced=*/true)) return false;

  std::optional<std::uint32_t> target;
  for (std::uint32_t c = 0; c < pt.cell_count(); ++c) {
    if (pt.cell_size(c) <= 2) continue;
    if (!target || g.rank[pt.elems[pt.begin[c]]] < g.rank[pt.elems[pt.begin[*target]]])
      target = c;
  }

  if (!target) {
    witness.assign(g.left_size, 0);
    for (std::uint32_t c = 0; c < pt.cell_count(); ++c) {
      auto a = pt.elems[pt.begin[c]];
      auto b = pt.elems[pt.begin[c] + 1];
      if (!g.is_left(a)) std::swap(a, b);
      witness[a] = static_cast<Vertex>(b - g.left_size);
    }
    return true;
  }

  std::vector<std::uint32_t> lefts, rights;
  for (auto i = pt.begin[*target]; i < pt.end[*target]; ++i) {
    auto x = pt.elems[i];
    (g.is_left(x) ? lefts : rights).push_back(x);
  }
  std::uint32_t v = *std::min_element(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  for (auto w : rights) {
    Partition next = pt;
    refiner.individualize(next, v, w);
    if (search(g, refiner, std::move(next), witness)) return true;
  }
  return false;
}

}  // namespace detail

/// Isomorphism-invariant digest of the equitable refinement of p (rank
/// seeded).  Isomorphic posets share digests; the converse need not hold.
inline std::string canonical_digest(const RankedPoset& p) {
  detail::ColorGraph g;
  g.append(p);
  g.left_size = g.size();
  detail::Refiner refiner(g);
  auto pt = refiner.rank_partition();
  refiner.refine(pt, /*balanced=*/false);

  std::vector<std::uint64_t> words{p.depth(), p.size(), p.edge_count()};
  std::vector<std::uint64_t> row;
  for (std::uint32_t c = 0; c < pt.cell_count(); ++c) {
    auto rep = pt.elems[pt.begin[c]];
    words.push_back(0xC0FFEEULL);
    words.push_back(g.rank[rep]);
    words.push_back(pt.cell_size(c));
    row.clear();
    for (auto w : g.up[rep]) row.push_back(pt.cell[w]);
    std::sort(row.begin(), row.end());
    words.insert(words.end(), row.begin(), row.end());
    words.push_back(0xD0D0ULL);
    row.clear();
    for (auto w : g.down[rep]) row.push_back(pt.cell[w]);
    std::sort(row.begin(), row.end());
    words.insert(words.end(), row.begin(), row.end());
  }
  return detail::fnv1a_hex(words);
}

/// True iff `map` is a rank-preserving bijection carrying covers of p
/// exactly onto covers of q.
inline bool is_isomorphism(const RankedPoset& p, const RankedPoset& q,
                           const std::vector<Vertex>& map) {
  if (p.size() != q.size() || map.size() != p.size() || p.edge_count() != q.edge_count())
    return false;
  std::vector<char> hit(q.size(), 0);
  for (Vertex v = 0; v < p.size(); ++v) {
    Vertex w = map[v];
    if (w >= q.size() || hit[w] || p.rank_of(v) != q.rank_of(w)) return false;
    hit[w] = 1;
  }
  for (Vertex v = 0; v < p.size(); ++v)
    for (Vertex x : p.up(v))
      if (!q.covers_edge(map[v], map[x])) return false;
  return true;
}

/// An isomorphism from p onto q, if one exists: colour refinement seeded by
/// rank over the disjoint union, then individualization-refinement
/// backtracking on the lowest-rank tied cell (lowest left id first).
inline std::optional<std::vector<Vertex>> find_isomorphism(const RankedPoset& p,
                                                           const RankedPoset& q) {
  if (p.rank_sizes() != q.rank_sizes() || p.edge_count() != q.edge_count()) return std::nullopt;
  detail::ColorGraph g;
  g.append(p);
  g.left_size = g.size();
  g.append(q);
  detail::Refiner refiner(g);
  std::vector<Vertex> witness;
  if (detail::search(g, refiner, refiner.rank_partition(), witness) &&
      is_isomorphism(p, q, witness))
    return witness;
  return std::nullopt;
}

inline IsoReport are_isomorphic(const RankedPoset& p, const RankedPoset& q) {
  IsoReport report;
  report.left_digest = canonical_digest(p);
  report.right_digest = canonical_digest(q);
  report.witness = find_isomorphism(p, q);
  report.isomorphic = report.witness.has_value();
  return report;
}

}  // namespace upho

#endif  // UPHO_ISOMORPHISM_HPP_
