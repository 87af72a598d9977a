#pragma once

#include <vector>

#include "burniat/polytope.hpp"

namespace burniat {

/// Exact vertex list of a polytope, sorted lexicographically and free of
/// duplicates. `incidence[v][i]` tells whether vertex v is tight on
/// inequality i of the source system.
struct VertexSet {
  std::vector<Point> vertices;
  std::vector<std::vector<bool>> incidence;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }
};

/// Double-description vertex enumeration (incremental constraint insertion,
/// combinatorial adjacency test, integer ray arithmetic). Throws
/// UnboundedError when P is a nonempty unbounded polyhedron.
VertexSet enumerate_vertices(const HPolytope& p);

}  // namespace burniat
