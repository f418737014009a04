#ifndef UPHO_POSET_HPP_
#define UPHO_POSET_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "upho/error.hpp"

namespace upho {

using Vertex = std::uint32_t;
using Rank = std::vector<Vertex>;
/// A cover edge (lower, upper); upper sits exactly one rank above lower.
using Cover = std::pair<Vertex, Vertex>;
/// For each rank, the left-to-right order of its vertices.
using Embedding = std::vector<Rank>;

/// Finite truncation of a graded poset: ranks 0 .. depth()-1, cover edges
/// between consecutive ranks, and optionally a left-to-right layout.
///
/// Vertex ids are dense (0 .. size()-1).  Constructions in this library
/// assign them rank-major and, when an embedding exists, left to right, but
/// loaded posets may use any dense numbering.
class RankedPoset {
 public:
  RankedPoset(std::vector<Rank> ranks, std::vector<Cover> covers,
              std::optional<Embedding> embedding = std::nullopt)
      : ranks_(std::move(ranks)), embedding_(std::move(embedding)) {
    validate_and_index(std::move(covers));
  }

  std::size_t depth() const noexcept { return ranks_.size(); }
  std::size_t size() const noexcept { return rank_of_.size(); }

  const std::vector<Rank>& ranks() const noexcept { return ranks_; }
  const Rank& rank(std::size_t i) const { return ranks_.at(i); }

  std::vector<std::size_t> rank_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(ranks_.size());
    for (const auto& r : ranks_) out.push_back(r.size());
    return out;
  }

  bool contains(Vertex v) const noexcept { return v < rank_of_.size(); }

  std::size_t rank_of(Vertex v) const {
    require(v);
    return rank_of_[v];
  }

  /// Vertices covering v, ordered left to right.
  std::span<const Vertex> up(Vertex v) const {
    require(v);
    return up_[v];
  }

  /// Vertices covered by v, ordered left to right.
  std::span<const Vertex> down(Vertex v) const {
    require(v);
    return down_[v];
  }

  bool has_embedding() const noexcept { return embedding_.has_value(); }

  const Embedding& embedding() const {
    if (!embedding_) throw Error(ErrorCode::MissingEmbedding, "poset has no embedding");
    return *embedding_;
  }

  const std::optional<Embedding>& maybe_embedding() const noexcept { return embedding_; }

  /// Left-to-right position within the rank: embedding slot if present,
  /// otherwise the index in the rank listing.
  std::size_t position(Vertex v) const {
    require(v);
    return position_[v];
  }

  /// Vertices of rank i in left-to-right order.
  const Rank& ordered_rank(std::size_t i) const {
    return embedding_ ? embedding_->at(i) : ranks_.at(i);
  }

  /// All cover edges, sorted lexicographically.
  std::vector<Cover> covers() const {
    std::vector<Cover> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : up_[u]) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t edge_count() const noexcept { return edge_count_; }

  bool covers_edge(Vertex lower, Vertex upper) const {
    require(lower);
    require(upper);
    const auto& ups = up_[lower];
    return std::find(ups.begin(), ups.end(), upper) != ups.end();
  }

 private:
  void require(Vertex v) const {
    if (v >= rank_of_.size())
      throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v));
  }

  void validate_and_index(std::vector<Cover> covers);

  std::vector<Rank> ranks_;
  std::optional<Embedding> embedding_;
  std::vector<std::size_t> rank_of_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Vertex>> up_;
  std::vector<std::vector<Vertex>> down_;
  std::size_t edge_count_ = 0;
};

inline void RankedPoset::validate_and_index(std::vector<Cover> covers) {
  std::size_t n = 0;
  for (const auto& r : ranks_) n += r.size();
  if (ranks_.empty() || n == 0) throw Error(ErrorCode::EmptyPoset, "poset has no vertices");

  constexpr auto unset = static_cast<std::size_t>(-1);
  rank_of_.assign(n, unset);
  position_.assign(n, 0);
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    for (std::size_t j = 0; j < ranks_[i].size(); ++j) {
      Vertex v = ranks_[i][j];
      if (v >= n || rank_of_[v] != unset)
        throw Error(ErrorCode::MalformedInput,
                    "vertex ids must be dense and listed once (offending id " +
                        std::to_string(v) + ")");
      rank_of_[v] = i;
      position_[v] = j;
    }
  }

  if (embedding_) {
    if (embedding_->size() != ranks_.size())
      throw Error(ErrorCode::MalformedInput, "embedding rank count differs from poset depth");
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      const auto& row = (*embedding_)[i];
      if (row.size() != ranks_[i].size())
        throw Error(ErrorCode::MalformedInput,
                    "embedding of rank " + std::to_string(i) + " is not a permutation");
      std::vector<bool> seen(row.size(), false);
      for (std::size_t j = 0; j < row.size(); ++j) {
        Vertex v = row[j];
        if (v >= n || rank_of_[v] != i || seen[position_[v]])
          throw Error(ErrorCode::MalformedInput,
                      "embedding of rank " + std::to_string(i) + " is not a permutation");
        seen[position_[v]] = true;
      }
      for (std::size_t j = 0; j < row.size(); ++j) position_[row[j]] = j;
    }
  }

  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end())
    throw Error(ErrorCode::DuplicateEdge, "(" + std::to_string(dup->first) + ", " +
                                              std::to_string(dup->second) + ")");

  up_.assign(n, {});
  down_.assign(n, {});
  for (const auto& [u, v] : covers) {
    if (u >= n) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(u));
    if (v >= n) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v));
    if (rank_of_[v] != rank_of_[u] + 1)
      throw Error(ErrorCode::EdgeRankSkip, "(" + std::to_string(u) + ", " + std::to_string(v) +
                                               ") spans ranks " + std::to_string(rank_of_[u]) +
                                               " -> " + std::to_string(rank_of_[v]));
    up_[u].push_back(v);
    down_[v].push_back(u);
  }
  edge_count_ = covers.size();

  auto by_position = [this](Vertex a, Vertex b) { return position_[a] < position_[b]; };
  for (Vertex v = 0; v < n; ++v) {
    std::sort(up_[v].begin(), up_[v].end(), by_position);
    std::sort(down_[v].begin(), down_[v].end(), by_position);
    if (rank_of_[v] > 0 && down_[v].empty())
      throw Error(ErrorCode::DanglingVertex, "vertex " + std::to_string(v) + " at rank " +
                                                 std::to_string(rank_of_[v]) +
                                                 " covers nothing");
  }
}

/// Validating constructor in free-function form.
inline RankedPoset new_poset(std::vector<Rank> ranks, std::vector<Cover> covers,
                             std::optional<Embedding> embedding = std::nullopt) {
  return RankedPoset(std::move(ranks), std::move(covers), std::move(embedding));
}

/// Cover edges between rank i and rank i+1, as (index in rank i, index in
/// rank i+1).
using LocalCovers = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Builds a poset from rank sizes and local cover lists.  Ids are rank-major
/// (rank offset + local index); with `embed`, local order is the layout.
inline RankedPoset build_layered(const std::vector<std::size_t>& sizes,
                                 const std::vector<LocalCovers>& layers, bool embed) {
  std::vector<Rank> ranks(sizes.size());
  std::vector<Vertex> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    offset[i + 1] = offset[i] + static_cast<Vertex>(sizes[i]);
    for (Vertex v = offset[i]; v < offset[i + 1]; ++v) ranks[i].push_back(v);
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < layers.size() && i + 1 < sizes.size(); ++i)
    for (const auto& [u, v] : layers[i]) covers.emplace_back(offset[i] + u, offset[i + 1] + v);
  std::optional<Embedding> emb;
  if (embed) emb = ranks;
  return RankedPoset(std::move(ranks), std::move(covers), std::move(emb));
}

/// A subposet together with the original id of each of its vertices.
struct MappedPoset {
  RankedPoset poset;
  std::vector<Vertex> to_original;
};

namespace detail {

// Builds the subposet induced on `layers` (original vertices, listed per new
// rank in left-to-right order).  New ids are assigned rank-major in that order.
inline MappedPoset induced(const RankedPoset& p, const std::vector<Rank>& layers) {
  std::vector<Vertex> to_new(p.size(), static_cast<Vertex>(-1));
  std::vector<Vertex> to_original;
  std::vector<Rank> ranks(layers.size());
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (Vertex v : layers[i]) {
      auto id = static_cast<Vertex>(to_original.size());
      to_new[v] = id;
      to_original.push_back(v);
      ranks[i].push_back(id);
    }
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    for (Vertex v : layers[i])
      for (Vertex w : p.up(v))
        if (to_new[w] != static_cast<Vertex>(-1)) covers.emplace_back(to_new[v], to_new[w]);
  std::optional<Embedding> emb;
  if (p.has_embedding()) emb = ranks;
  return {RankedPoset(std::move(ranks), std::move(covers), std::move(emb)),
          std::move(to_original)};
}

}  // namespace detail

/// Keeps ranks 0 .. depth-1.
inline RankedPoset truncate(const RankedPoset& p, std::size_t depth) {
  if (depth == 0 || depth > p.depth())
    throw Error(ErrorCode::InsufficientDepth, "cannot truncate depth " +
                                                  std::to_string(p.depth()) + " poset to " +
                                                  std::to_string(depth) + " ranks");
  if (depth == p.depth()) return p;
  std::vector<Rank> layers(p.ranks().begin(), p.ranks().begin() + depth);
  for (std::size_t i = 0; i < depth; ++i) layers[i] = p.ordered_rank(i);
  return detail::induced(p, layers).poset;
}

/// The principal order filter above s, re-ranked so that s sits at rank 0,
/// with the id map back into p.
inline MappedPoset order_filter_mapped(const RankedPoset& p, Vertex s) {
  if (!p.contains(s)) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(s));
  const std::size_t base = p.rank_of(s);
  std::vector<char> in(p.size(), 0);
  in[s] = 1;
  std::vector<Rank> layers(p.depth() - base);
  layers[0] = {s};
  for (std::size_t i = base + 1; i < p.depth(); ++i) {
    for (Vertex v : p.ordered_rank(i)) {
      for (Vertex w : p.down(v)) {
        if (in[w]) {
          in[v] = 1;
          layers[i - base].push_back(v);
          break;
        }
      }
    }
  }
  return detail::induced(p, layers);
}

inline RankedPoset order_filter(const RankedPoset& p, Vertex s) {
  return order_filter_mapped(p, s).poset;
}

/// Truncated Cartesian product: pairs (x, y) with rank(x) + rank(y) < depth.
/// A factor with a single vertex is complete at every depth.
inline RankedPoset product(const RankedPoset& p, const RankedPoset& q, std::size_t depth) {
  auto check = [depth](const RankedPoset& f, const char* which) {
    if (f.size() != 1 && f.depth() < depth)
      throw Error(ErrorCode::InsufficientDepth,
                  std::string(which) + " factor has " + std::to_string(f.depth()) +
                      " ranks, product needs " + std::to_string(depth));
  };
  check(p, "left");
  check(q, "right");
  if (depth == 0) throw Error(ErrorCode::InsufficientDepth, "product depth must be positive");

  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  std::vector<Vertex> id(np * nq, static_cast<Vertex>(-1));
  std::vector<Rank> ranks;
  Vertex next = 0;
  for (std::size_t k = 0; k < depth; ++k) {
    Rank row;
    for (std::size_t t = 0; t <= k; ++t) {
      if (t >= p.depth() || k - t >= q.depth()) continue;
      for (Vertex x : p.ordered_rank(t))
        for (Vertex y : q.ordered_rank(k - t)) {
          id[x * nq + y] = next;
          row.push_back(next++);
        }
    }
    if (row.empty()) break;
    ranks.push_back(std::move(row));
  }
  std::vector<Cover> covers;
  for (Vertex x = 0; x < np; ++x)
    for (Vertex y = 0; y < nq; ++y) {
      Vertex from = id[x * nq + y];
      if (from == static_cast<Vertex>(-1)) continue;
      for (Vertex x2 : p.up(x))
        if (Vertex to = id[x2 * nq + y]; to != static_cast<Vertex>(-1)) covers.emplace_back(from, to);
      for (Vertex y2 : q.up(y))
        if (Vertex to = id[x * nq + y2]; to != static_cast<Vertex>(-1)) covers.emplace_back(from, to);
    }
  return RankedPoset(std::move(ranks), std::move(covers));
}

struct NoMeet {};
/// The maximal common lower bounds when there is more than one.
struct NonUnique {
  std::vector<Vertex> antichain;
};
using MeetResult = std::variant<Vertex, NoMeet, NonUnique>;

namespace detail {

inline std::vector<char> down_closure(const RankedPoset& p, Vertex v) {
  std::vector<char> mark(p.size(), 0);
  std::vector<Vertex> stack{v};
  mark[v] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : p.down(x))
      if (!mark[y]) {
        mark[y] = 1;
        stack.push_back(y);
      }
  }
  return mark;
}

}  // namespace detail

/// Greatest lower bound of u and v.  Lower bounds lie at ranks at most
/// min(rank(u), rank(v)), so the answer does not depend on truncation.
inline MeetResult meet(const RankedPoset& p, Vertex u, Vertex v) {
  if (!p.contains(u)) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(u));
  if (!p.contains(v)) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v));
  auto lu = detail::down_closure(p, u);
  auto lv = detail::down_closure(p, v);
  std::vector<Vertex> maximal;
  for (Vertex x = 0; x < p.size(); ++x) {
    if (!(lu[x] && lv[x])) continue;
    // The common lower bounds form a down-set, so x is maximal iff no
    // element covering x is a common lower bound.
    bool is_max = std::none_of(p.up(x).begin(), p.up(x).end(),
                               [&](Vertex y) { return lu[y] && lv[y]; });
    if (is_max) maximal.push_back(x);
  }
  if (maximal.empty()) return NoMeet{};
  if (maximal.size() == 1) return maximal.front();
  std::sort(maximal.begin(), maximal.end());
  return NonUnique{std::move(maximal)};
}

/// True iff rank 0 is a single vertex and everything else covers something.
inline bool unique_min_check(const RankedPoset& p) {
  if (p.rank(0).size() != 1) return false;
  for (Vertex v = 0; v < p.size(); ++v)
    if (p.rank_of(v) > 0 && p.down(v).empty()) return false;
  return true;
}

/// First pair (u, v), u < v, without a unique meet; nullopt for a meet
/// semilattice.
inline std::optional<std::pair<Vertex, Vertex>> find_meet_failure(const RankedPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<char>> closures;
  closures.reserve(n);
  for (Vertex v = 0; v < n; ++v) closures.push_back(detail::down_closure(p, v));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto& lu = closures[u];
      const auto& lv = closures[v];
      std::size_t maximal = 0;
      for (Vertex x = 0; x < n && maximal < 2; ++x) {
        if (!(lu[x] && lv[x])) continue;
        bool is_max = std::none_of(p.up(x).begin(), p.up(x).end(),
                                   [&](Vertex y) { return lu[y] && lv[y]; });
        if (is_max) ++maximal;
      }
      if (maximal != 1) return std::pair{u, v};
    }
  return std::nullopt;
}

}  // namespace upho

#endif  // UPHO_POSET_HPP_
