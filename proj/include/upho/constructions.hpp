#ifndef UPHO_CONSTRUCTIONS_HPP_
#define UPHO_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "upho/error.hpp"
#include "upho/poset.hpp"

namespace upho {

/// Full k-ary tree truncated to `depth` ranks, laid out left to right.
inline RankedPoset k_ary_tree(std::size_t k, std::size_t depth) {
  if (k < 1) throw Error(ErrorCode::MalformedInput, "tree arity must be at least 1");
  if (depth < 1) throw Error(ErrorCode::InsufficientDepth, "depth must be at least 1");
  std::vector<std::size_t> sizes{1};
  std::vector<LocalCovers> layers;
  for (std::size_t i = 1; i < depth; ++i) {
    LocalCovers layer;
    for (std::uint32_t x = 0; x < sizes.back(); ++x)
      for (std::uint32_t c = 0; c < k; ++c) layer.emplace_back(x, static_cast<std::uint32_t>(k * x + c));
    sizes.push_back(sizes.back() * k);
    layers.push_back(std::move(layer));
  }
  return build_layered(sizes, layers, /*embed=*/true);
}

inline RankedPoset chain(std::size_t depth) { return k_ary_tree(1, depth); }

/// Parameters of the grid poset on points 0 <= y_i <= a_i.
struct GridSpec {
  std::vector<std::uint32_t> a;
  std::size_t depth = 1;
};

/// Parameters of the poset with rank-generating function
/// prod (1 + a_i x) / (1 - b x).
struct BConstructionSpec {
  std::vector<std::uint32_t> a;
  std::uint32_t b = 1;
  std::size_t depth = 1;
};

namespace detail {

// Points of the box prod [0, a_i], enumerated in lexicographic order, and for
// each rank k the points with at most k nonzero coordinates.
struct GridLayout {
  std::vector<std::uint32_t> radix;
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::size_t> nonzero;
  std::vector<std::vector<std::uint32_t>> rank_points;
  std::vector<std::vector<std::uint32_t>> local;  // local[k][point] or -1

  explicit GridLayout(const GridSpec& spec) {
    for (auto ai : spec.a) {
      if (ai < 1) throw Error(ErrorCode::MalformedInput, "grid parameters must be positive");
      radix.push_back(ai + 1);
    }
    if (spec.depth < 1) throw Error(ErrorCode::InsufficientDepth, "depth must be at least 1");
    std::vector<std::uint32_t> y(radix.size(), 0);
    while (true) {
      points.push_back(y);
      std::size_t nz = 0;
      for (auto v : y) nz += v != 0;
      nonzero.push_back(nz);
      std::size_t i = y.size();
      while (i > 0 && ++y[i - 1] == radix[i - 1]) y[--i] = 0;
      if (i == 0) break;
    }
    constexpr auto none = static_cast<std::uint32_t>(-1);
    for (std::size_t k = 0; k < spec.depth; ++k) {
      std::vector<std::uint32_t> row, index(points.size(), none);
      for (std::uint32_t p = 0; p < points.size(); ++p)
        if (nonzero[p] <= k) {
          index[p] = static_cast<std::uint32_t>(row.size());
          row.push_back(p);
        }
      rank_points.push_back(std::move(row));
      local.push_back(std::move(index));
    }
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& y) const {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < y.size(); ++i) code = code * radix[i] + y[i];
    return code;
  }

  // Points equal to p or differing from it in exactly one coordinate.
  std::vector<std::uint32_t> neighbours(std::uint32_t p) const {
    std::vector<std::uint32_t> out{p};
    auto y = points[p];
    for (std::size_t i = 0; i < y.size(); ++i) {
      const auto keep = y[i];
      for (std::uint32_t v = 0; v < radix[i]; ++v) {
        if (v == keep) continue;
        y[i] = v;
        out.push_back(encode(y));
      }
      y[i] = keep;
    }
    return out;
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& r : rank_points) out.push_back(r.size());
    return out;
  }

  std::vector<LocalCovers> layers() const {
    std::vector<LocalCovers> out;
    for (std::size_t k = 0; k + 1 < rank_points.size(); ++k) {
      LocalCovers layer;
      for (std::uint32_t x = 0; x < rank_points[k].size(); ++x)
        for (auto q : neighbours(rank_points[k][x])) layer.emplace_back(x, local[k + 1][q]);
      out.push_back(std::move(layer));
    }
    return out;
  }
};

}  // namespace detail

/// Rank k holds the points with at most k nonzero coordinates, in
/// lexicographic order; (y; k) is covered by (z; k+1) iff y and z differ in
/// at most one coordinate.
inline RankedPoset grid_construction(const GridSpec& spec) {
  detail::GridLayout layout(spec);
  return build_layered(layout.sizes(), layout.layers(), /*embed=*/false);
}

/// Coordinates of a grid vertex.
inline std::vector<std::uint32_t> grid_point(const GridSpec& spec, Vertex v) {
  detail::GridLayout layout(spec);
  for (const auto& row : layout.rank_points) {
    if (v < row.size()) return layout.points[row[v]];
    v -= static_cast<Vertex>(row.size());
  }
  throw Error(ErrorCode::VertexNotFound, "vertex outside the grid truncation");
}

/// The translation y -> y + p (mod a_i + 1), rank k -> k + rank(p).
/// Entry v is the image of vertex v of the grid truncated to
/// depth - rank(p) ranks; the image is the order filter above p.
inline std::vector<Vertex> grid_filter_map(const GridSpec& spec, Vertex p) {
  detail::GridLayout layout(spec);
  std::vector<Vertex> offset{0};
  for (const auto& row : layout.rank_points) offset.push_back(offset.back() + static_cast<Vertex>(row.size()));
  if (p >= offset.back()) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(p));
  std::size_t kp = 0;
  while (p >= offset[kp + 1]) ++kp;
  const auto& shift = layout.points[layout.rank_points[kp][p - offset[kp]]];

  std::vector<Vertex> image;
  for (std::size_t k = 0; k + kp < spec.depth; ++k) {
    for (auto q : layout.rank_points[k]) {
      auto y = layout.points[q];
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + shift[i]) % layout.radix[i];
      auto target = layout.local[k + kp][layout.encode(y)];
      if (target == static_cast<std::uint32_t>(-1))
        throw Error(ErrorCode::StructureError, "translated point leaves the rank");
      image.push_back(offset[k + kp] + target);
    }
  }
  return image;
}

/// Built one rank at a time.  Rank i is the union of groups G(i,0), a copy
/// of rank i of the grid poset for `a`, and G(i,j) for 1 <= j <= i, each
/// holding b-1 copies of rank j-1 of the construction itself.  Covers:
/// G(i-1,0) -> G(i,0) as in the grid; every vertex of G(i,1) covers all of
/// G(i-1,0); copy c of G(i-1,j) -> copy c of G(i,j+1) as rank j-1 -> j.
/// Local order within a rank is group-major, then copy-major.
inline RankedPoset b_construction(const BConstructionSpec& spec) {
  if (spec.b < 1) throw Error(ErrorCode::MalformedInput, "b must be at least 1");
  detail::GridLayout grid(GridSpec{spec.a, spec.depth});
  const auto s = grid.sizes();
  const auto grid_layers = grid.layers();
  const std::uint32_t copies = spec.b - 1;

  std::vector<std::size_t> r;            // rank sizes of the construction
  std::vector<std::size_t> prefix{0};    // prefix[t] = r_0 + ... + r_{t-1}
  std::vector<LocalCovers> layers;
  // Start of copy 0 of group j >= 1 within any rank.
  auto group_start = [&](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(s[i] + copies * prefix[j - 1]);
  };

  for (std::size_t i = 0; i < spec.depth; ++i) {
    r.push_back(s[i] + copies * prefix[i]);
    prefix.push_back(prefix.back() + r.back());
    if (i == 0) continue;
    LocalCovers layer = grid_layers[i - 1];
    for (std::uint32_t c = 0; c < copies; ++c)
      for (std::uint32_t u = 0; u < s[i - 1]; ++u) layer.emplace_back(u, group_start(i, 1) + c);
    for (std::size_t j = 1; j + 1 <= i; ++j) {
      // Copies of Q_{j-1} in rank i-1 extend to copies of Q_j in rank i.
      const LocalCovers& own = layers[j - 1];
      for (std::uint32_t c = 0; c < copies; ++c) {
        const auto from = group_start(i - 1, j) + c * static_cast<std::uint32_t>(r[j - 1]);
        const auto to = group_start(i, j + 1) + c * static_cast<std::uint32_t>(r[j]);
        for (const auto& [x, y] : own) layer.emplace_back(from + x, to + y);
      }
    }
    layers.push_back(std::move(layer));
  }
  return build_layered(r, layers, /*embed=*/false);
}

/// b_construction(a, b_1) times the b_j-ary trees for j >= 2.
inline RankedPoset theorem12_construction(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b,
                                          std::size_t depth) {
  if (b.empty()) throw Error(ErrorCode::MalformedInput, "at least one denominator factor is required");
  for (auto x : a)
    if (x < 1) throw Error(ErrorCode::MalformedInput, "numerator parameters must be positive");
  for (auto x : b)
    if (x < 1) throw Error(ErrorCode::MalformedInput, "denominator parameters must be positive");
  RankedPoset out = b_construction({a, b.front(), depth});
  for (std::size_t j = 1; j < b.size(); ++j) out = product(out, k_ary_tree(b[j], depth), depth);
  return out;
}

}  // namespace upho

#endif  // UPHO_CONSTRUCTIONS_HPP_
