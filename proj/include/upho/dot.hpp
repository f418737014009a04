#ifndef UPHO_DOT_HPP_
#define UPHO_DOT_HPP_

#include <sstream>
#include <string>

#include "upho/poset.hpp"

namespace upho {

/// Hasse diagram, rank 0 at the bottom.  Each rank is a rank=same group;
/// invisible edges chain its vertices left to right.
inline std::string to_dot(const RankedPoset& p, const std::string& name = "P") {
  std::ostringstream out;
  out << "digraph " << name << " {\n"
      << "  rankdir=BT;\n  node [shape=circle, label=\"\", width=0.15];\n  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < p.depth(); ++i) {
    const auto row = p.ordered_rank(i);
    out << "  { rank=same;";
    for (auto v : row) out << " v" << v << ";";
    out << " }\n";
    for (std::size_t j = 1; j < row.size(); ++j)
      out << "  v" << row[j - 1] << " -> v" << row[j] << " [style=invis];\n";
  }
  for (const auto& [u, v] : p.covers()) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace upho

#endif  // UPHO_DOT_HPP_
