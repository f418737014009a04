#ifndef UPHO_UPHO_CHECK_HPP_
#define UPHO_UPHO_CHECK_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "upho/isomorphism.hpp"
#include "upho/poset.hpp"

namespace upho {

struct CheckedRoot {
  Vertex vertex;
  std::size_t rank;
  /// Number of ranks compared between the filter and the poset.
  std::size_t compared_depth;
};

struct UphoReport {
  std::size_t min_depth = 0;
  std::size_t max_root_rank = 0;
  std::vector<CheckedRoot> checked_roots;
  std::vector<Vertex> failures;

  bool pass() const { return failures.empty(); }
};

/// Compares the order filter above every vertex s with
/// 1 <= rank(s) <= max_root_rank against the poset itself, both truncated to
/// depth - rank(s) ranks.  A pass certifies the truncation only.
inline UphoReport verify_upho(const RankedPoset& p, std::size_t min_depth,
                              std::size_t max_root_rank) {
  if (min_depth == 0 || p.depth() < min_depth + max_root_rank)
    throw Error(ErrorCode::InsufficientDepth,
                "verify_upho needs depth >= min_depth + max_root_rank (depth " +
                    std::to_string(p.depth()) + ", min_depth " + std::to_string(min_depth) +
                    ", max_root_rank " + std::to_string(max_root_rank) + ")");
  UphoReport report;
  report.min_depth = min_depth;
  report.max_root_rank = max_root_rank;

  std::map<std::size_t, RankedPoset> prefixes;
  for (std::size_t r = 1; r <= max_root_rank; ++r) {
    const std::size_t d = p.depth() - r;
    auto [it, inserted] = prefixes.try_emplace(d, truncate(p, d));
    for (Vertex s : p.ordered_rank(r)) {
      report.checked_roots.push_back({s, r, d});
      auto filter = order_filter(p, s);
      if (!find_isomorphism(filter, it->second)) report.failures.push_back(s);
    }
  }
  return report;
}

}  // namespace upho

#endif  // UPHO_UPHO_CHECK_HPP_
