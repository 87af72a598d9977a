#pragma once

#include <optional>
#include <vector>

#include "burniat/polytope.hpp"
#include "burniat/rational.hpp"

namespace burniat {

using Matrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Integer>>;

std::size_t rank(Matrix m);
Rational determinant(Matrix m);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in the given order.
std::vector<std::size_t> independent_rows(const Matrix& m);

/// Basis of the lattice {x in Z^n : rows * x = 0}, computed by unimodular
/// column reduction (the trailing columns of the transform).
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n);

/// The solution set of a system of equalities as origin + span(basis), where
/// basis is a Z-basis of the integer points of the homogeneous solution space.
struct AffineChart {
  Point origin;
  IntMatrix basis;  // each entry is a direction vector of length n

  std::size_t dim() const { return basis.size(); }
  Point to_ambient(const Point& local) const;
};

/// nullopt when the equalities are inconsistent. Inequality rows are ignored.
std::optional<AffineChart> affine_chart(const std::vector<Constraint>& equalities, std::size_t n);

/// Integer row proportional to a constraint's coefficient vector.
std::vector<Integer> integer_row(const std::vector<Rational>& coeffs);

}  // namespace burniat
