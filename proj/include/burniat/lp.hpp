#pragma once

#include <optional>
#include <span>
#include <vector>

#include "burniat/polytope.hpp"

namespace burniat {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective at `point` when Optimal
  Point point;
};

/// Exact primal simplex (two phases, Bland's rule) maximizing
/// objective · x over P.
LpSolution maximize(const HPolytope& p, const std::vector<Rational>& objective);
LpSolution minimize(const HPolytope& p, const std::vector<Rational>& objective);

struct SlackSolution {
  Rational slack;  // optimal least slack over the strict set, capped at 1
  Point point;
};

/// Maximizes the least slack of the inequalities in `strict` over P; nullopt
/// for empty P. A nonpositive optimum certifies that no point of P satisfies
/// them all strictly.
std::optional<SlackSolution> max_min_slack(const HPolytope& p, std::span<const std::size_t> strict);

/// A rational point of P whose inequalities listed in `strict` hold strictly,
/// or nullopt. Strictness is decided by maximizing the least slack over
/// `strict` and testing it against zero.
std::optional<Point> lp_feasible(const HPolytope& p, std::span<const std::size_t> strict = {});

/// Indices of inequalities that hold with equality on all of P (implicit
/// equalities). Empty P yields every index.
std::vector<std::size_t> implicit_equalities(const HPolytope& p);

/// Complement of implicit_equalities: the inequalities that are strict on the
/// relative interior.
std::vector<std::size_t> relint_strict_set(const HPolytope& p);

/// A point of the relative interior of P, or nullopt for empty P.
std::optional<Point> relative_interior_point(const HPolytope& p);

/// -1 for empty P, otherwise the dimension of its affine hull.
int affine_dim(const HPolytope& p);

/// Drops every inequality implied by the remaining constraints.
HPolytope remove_redundant(const HPolytope& p);

}  // namespace burniat
