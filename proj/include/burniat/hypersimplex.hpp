#pragma once

#include <string>
#include <vector>

#include "burniat/arrangement.hpp"
#include "burniat/polytope.hpp"

namespace burniat {

/// Delta(r, n) = {0 <= x_i <= 1, sum x_i = r} over variables x1..xn.
HPolytope hypersimplex(int r, int n);
/// Same polytope over caller-chosen variable names.
HPolytope hypersimplex(int r, const std::vector<std::string>& vars);

/// {x in delta : x_i <= b_i}.
HPolytope b_cut(const HPolytope& delta, const Weight& w);

/// The face of delta_b where x_i = b_i for every i in `incident`.
HPolytope face_at_point(const HPolytope& delta_b, const IndexSet& incident, const Weight& w);

/// Matroid base polytope of a realizable arrangement: Delta(r, n) cut by
/// sum_{i in F} x_i <= rank(F) for every dependent closed flat F, with
/// redundant inequalities pruned. Variables are the hyperplane names.
HPolytope matroid_polytope_from_arrangement(const ArrangementSpec& a);

/// Matroid base polytope given by its rank inequalities directly: Delta(r, n)
/// over `vars` cut by `rows`, redundant rows pruned.
HPolytope matroid_polytope_from_inequalities(int r, const std::vector<std::string>& vars,
                                             const std::vector<Constraint>& rows);

}  // namespace burniat
