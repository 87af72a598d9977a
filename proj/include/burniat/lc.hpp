#pragma once

#include <string>

#include "burniat/arrangement.hpp"
#include "burniat/polytope.hpp"

namespace burniat {

/// Outcome of a log-canonicity test. On failure `flat` is the offending
/// closed flat, `sum` the weight it carries and `codim` its codimension.
struct LcVerdict {
  bool lc = true;
  std::uint64_t flat = 0;
  Rational sum;
  std::size_t codim = 0;
};

/// lc iff every flat with nonempty intersection carries total weight at most
/// its codimension. A sum equal to the codimension is lc (not klt).
LcVerdict is_lc(const ArrangementSpec& a, const std::vector<Rational>& x);

/// The same test restricted to flats through the point whose hyperplanes are
/// `incident` (subsets of `incident`).
LcVerdict is_lc_at_point(const ArrangementSpec& a, const std::vector<Rational>& x, const IndexSet& incident);

/// lc for the arrangement's own weights, and total weight > r.
bool is_stable(const ArrangementSpec& a);

/// lc at a point decided through the matroid polytope: nonempty
/// BP ∩ face_at_point(Delta_b, incident). Throws HypothesisError unless the
/// arrangement is of general type and BP meets Delta_b.
bool lc_at_point_via_polytope(const ArrangementSpec& a, const HPolytope& bp, const IndexSet& incident);

/// "LC" or "NOT-LC I={A1,B1,C1} sum=3/2 codim=2".
std::string format_verdict(const ArrangementSpec& a, const LcVerdict& v);

}  // namespace burniat
