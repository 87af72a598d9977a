#pragma once

#include <cstddef>
#include <vector>

#include "burniat/polytope.hpp"
#include "burniat/vertices.hpp"

namespace burniat {

/// Which vertex a pulling step cones from: the lexicographically smallest
/// remaining vertex, or the largest.
enum class TriangulationOrder { Lexicographic, Reverse };

using Simplex = std::vector<std::size_t>;  // indices into a VertexSet

/// Pulling triangulation of a polytope of dimension `dim` given by its
/// vertices and vertex/inequality incidences. Each facet is triangulated once
/// and shared by every cone that uses it.
std::vector<Simplex> pulling_triangulation(const VertexSet& vs, int dim, TriangulationOrder order);

/// Euclidean volume times dim!, measured in the lattice of integer points of
/// the linear space cut out by P's explicit equalities (homogeneous parts).
/// Zero whenever P is lower dimensional than that space. Throws
/// UnboundedError for unbounded P.
Rational normalized_volume(const HPolytope& p, TriangulationOrder order = TriangulationOrder::Lexicographic);

/// Same as above with a precomputed vertex set of `p`.
Rational normalized_volume(const HPolytope& p, const VertexSet& vs,
                           TriangulationOrder order = TriangulationOrder::Lexicographic);

}  // namespace burniat
