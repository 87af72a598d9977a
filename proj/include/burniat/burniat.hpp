#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/polytope.hpp"

namespace burniat {

enum class BurniatVariant { Plain, Nodal, NonNodal };

/// Which lines (A_i, B_j, C_k with i, j, k in {1, 2}) pass through one of the
/// extra triple points P_1, P_2, ... of the configuration.
using TriplePoint = std::array<int, 3>;

/// The parameter polytope of Burniat pairs with K^2 = degree. Free
/// coordinates are (a0,a1,a2,b0,b1,b2,c0,c1,c2); a3, b3, c3 and the
/// exceptional functionals e_k are affine forms in them.
struct BurniatAmbient {
  int degree = 6;
  BurniatVariant variant = BurniatVariant::Plain;
  std::vector<TriplePoint> triple_points;

  /// Standard incidence patterns; throws InputError when a variant is given
  /// for a degree other than 4, or when the degree is outside 3..6.
  static BurniatAmbient standard(int degree, std::optional<BurniatVariant> variant = std::nullopt);

  /// "bur6", "bur5", "bur4-nodal", "bur4-nonnodal", "bur3".
  static BurniatAmbient from_name(std::string_view name);
  std::string name() const;
};

const std::vector<std::string>& burniat_vars();

/// a3 = c0+c1+c2+b0-1, b3 = a0+a1+a2+c0-1, c3 = b0+b1+b2+a0-1.
AffineForm burniat_a3();
AffineForm burniat_b3();
AffineForm burniat_c3();
/// a_i + b_j + c_k - 1 for a triple point on A_i, B_j, C_k.
AffineForm exceptional_form(const TriplePoint& t);

/// Resolves a0..c2, the derived a3, b3, c3, and e = a1+b1+c1-1.
SymbolResolver burniat_resolver();

HPolytope burniat_polytope(const BurniatAmbient& ambient);
HPolytope burniat_polytope(int degree, std::optional<BurniatVariant> variant = std::nullopt);

/// Delta(3,9) over the Burniat coordinates.
HPolytope burniat_hypersimplex();

/// x -> (images[i](x))_i, an affine self-map of the coordinate space.
struct AffineMap {
  std::vector<AffineForm> images;
  Point apply(const Point& x) const;
};

/// {x : map(x) in P}.
HPolytope pullback(const HPolytope& p, const AffineMap& map);

/// a_i -> b_i -> c_i -> a_i.
AffineMap cyclic_symmetry();
/// The 0 <-> 3 relabeling a0 <-> a3, b0 <-> b3, c0 <-> c3 (an affine
/// involution on the plane sum = 3).
AffineMap cremona_symmetry();
/// Exchange of P_1 and P_2 for the K^2 = 4 variants.
AffineMap z2_symmetry(BurniatVariant variant);

}  // namespace burniat
