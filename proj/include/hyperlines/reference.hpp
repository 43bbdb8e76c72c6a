#pragma once

#include <set>
#include <vector>

#include "hyperlines/hypergraph.hpp"

// Naive reference line engine: sets of sets, no bit tricks. Used to
// cross-check the optimized engine in lines.hpp.
namespace hyperlines::reference {

using NaiveLine = std::set<VertexId>;
using NaiveLineSet = std::set<NaiveLine>;

inline NaiveLineSet all_lines(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  std::set<std::set<VertexId>> hedges;
  for (const auto& t : h.hedges()) hedges.insert({t.a, t.b, t.c});

  NaiveLineSet lines;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      NaiveLine line{u, v};
      for (VertexId p = 0; p < n; ++p)
        if (p != u && p != v && hedges.count({u, v, p}) != 0) line.insert(p);
      lines.insert(line);
    }
  }
  return lines;
}

inline bool has_universal_line(const NaiveLineSet& lines, std::size_t n) {
  for (const auto& line : lines)
    if (line.size() == n) return true;
  return false;
}

}  // namespace hyperlines::reference
