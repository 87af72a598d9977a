#include "burniat/lp.hpp"

#include <algorithm>

#include "burniat/errors.hpp"
#include "burniat/linalg.hpp"

namespace burniat {

namespace {

// maximize c·y  s.t.  G y <= h,  y free.
struct InequalityLp {
  Matrix g;
  std::vector<Rational> h;
  std::vector<Rational> c;
};

struct CoreResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Point y;
};

// Dense tableau over the standard form  G u - G w + s (+ a) = h,  all >= 0.
class Tableau {
 public:
  Tableau(const InequalityLp& lp) : m_(lp.g.size()), k_(lp.c.size()) {
    // Columns: u (k), w (k), s (m), artificial (one per negative-rhs row).
    std::size_t n_art = 0;
    for (const auto& v : lp.h) n_art += sgn(v) < 0 ? 1 : 0;
    n_ = 2 * k_ + m_ + n_art;
    rows_.assign(m_, std::vector<Rational>(n_ + 1, 0));
    basis_.assign(m_, 0);
    artificial_begin_ = 2 * k_ + m_;
    std::size_t art = artificial_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      int sign = sgn(lp.h[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < k_; ++j) {
        if (sgn(lp.g[i][j]) == 0) continue;
        rows_[i][j] = sign * lp.g[i][j];
        rows_[i][k_ + j] = -sign * lp.g[i][j];
      }
      rows_[i][2 * k_ + i] = sign;
      rows_[i][n_] = sign * lp.h[i];
      if (sign < 0) {
        rows_[i][art] = 1;
        basis_[i] = art++;
      } else {
        basis_[i] = 2 * k_ + i;
      }
    }
  }

  CoreResult solve(const std::vector<Rational>& c) {
    CoreResult out;
    if (artificial_begin_ < n_) {
      std::vector<Rational> phase1(n_, 0);
      for (std::size_t j = artificial_begin_; j < n_; ++j) phase1[j] = -1;
      optimize(phase1, n_);
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= artificial_begin_ && sgn(rows_[i][n_]) != 0) return out;  // infeasible
      }
      drive_out_artificials();
    }
    std::vector<Rational> obj(n_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
      obj[j] = c[j];
      obj[k_ + j] = -c[j];
    }
    if (!optimize(obj, artificial_begin_)) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    std::vector<Rational> x(n_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][n_];
    out.y.assign(k_, 0);
    for (std::size_t j = 0; j < k_; ++j) out.y[j] = x[j] - x[k_ + j];
    out.value = 0;
    for (std::size_t j = 0; j < k_; ++j) out.value += c[j] * out.y[j];
    return out;
  }

 private:
  void pivot(std::size_t r, std::size_t col, std::vector<Rational>& cost) {
    Rational inv = 1 / rows_[r][col];
    for (auto& v : rows_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= n_; ++j) {
      if (sgn(rows_[r][j]) != 0) nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][col]) == 0) continue;
      Rational f = rows_[i][col];
      for (auto j : nz) rows_[i][j] -= f * rows_[r][j];
    }
    if (sgn(cost[col]) != 0) {
      Rational f = cost[col];
      for (auto j : nz) cost[j] -= f * rows_[r][j];
    }
    basis_[r] = col;
  }

  // Maximizes obj over columns < limit. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& obj, std::size_t limit) {
    // cost[j] = reduced cost; cost[n_] = -(objective value).
    std::vector<Rational> cost(n_ + 1, 0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = obj[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = obj[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost[j] -= cb * rows_[i][j];
      }
    }
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(cost[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][n_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter, cost);
    }
  }

  void drive_out_artificials() {
    std::vector<Rational> dummy(n_ + 1, 0);
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < artificial_begin_) {
        ++i;
        continue;
      }
      std::size_t col = artificial_begin_;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == artificial_begin_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col, dummy);
      ++i;
    }
  }

  std::size_t m_;
  std::size_t k_;
  std::size_t n_ = 0;
  std::size_t artificial_begin_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

struct Reduced {
  AffineChart chart;
  Matrix g;  // inequality rows in chart coordinates
  std::vector<Rational> h;
};

std::optional<Reduced> reduce(const HPolytope& p) {
  auto chart = affine_chart(p.equalities(), p.ambient_dim());
  if (!chart) return std::nullopt;
  Reduced r{std::move(*chart), {}, {}};
  const std::size_t k = r.chart.dim();
  for (const auto& c : p.inequalities()) {
    std::vector<Rational> row(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (sgn(c.coeffs[i]) != 0 && r.chart.basis[j][i] != 0) row[j] += c.coeffs[i] * Rational(r.chart.basis[j][i]);
      }
    }
    r.g.push_back(std::move(row));
    r.h.push_back(c.rhs - c.evaluate(r.chart.origin));
  }
  return r;
}

std::vector<Rational> reduce_objective(const AffineChart& chart, const std::vector<Rational>& objective) {
  std::vector<Rational> c(chart.dim(), 0);
  for (std::size_t j = 0; j < chart.dim(); ++j) {
    for (std::size_t i = 0; i < objective.size(); ++i) {
      if (sgn(objective[i]) != 0 && chart.basis[j][i] != 0) c[j] += objective[i] * Rational(chart.basis[j][i]);
    }
  }
  return c;
}

CoreResult solve_core(const InequalityLp& lp) {
  Tableau t(lp);
  return t.solve(lp.c);
}

}  // namespace

LpSolution maximize(const HPolytope& p, const std::vector<Rational>& objective) {
  if (objective.size() != p.ambient_dim()) throw InputError("objective width does not match variable count");
  LpSolution out;
  auto red = reduce(p);
  if (!red) return out;
  InequalityLp lp{red->g, red->h, reduce_objective(red->chart, objective)};
  auto core = solve_core(lp);
  out.status = core.status;
  if (core.status == LpStatus::Optimal) {
    out.point = red->chart.to_ambient(core.y);
    out.value = 0;
    for (std::size_t i = 0; i < objective.size(); ++i) out.value += objective[i] * out.point[i];
  }
  return out;
}

LpSolution minimize(const HPolytope& p, const std::vector<Rational>& objective) {
  std::vector<Rational> neg = objective;
  for (auto& v : neg) v = -v;
  auto sol = maximize(p, neg);
  sol.value = -sol.value;
  return sol;
}

std::optional<SlackSolution> max_min_slack(const HPolytope& p, std::span<const std::size_t> strict) {
  for (auto idx : strict) {
    if (idx >= p.inequalities().size()) throw InputError("strict index out of range");
  }
  auto red = reduce(p);
  if (!red) return std::nullopt;
  const std::size_t k = red->chart.dim();
  // Variables (y, t): maximize t  s.t.  G y + t [i in strict] <= h,  t <= 1.
  InequalityLp lp;
  lp.g = red->g;
  lp.h = red->h;
  std::vector<bool> is_strict(lp.g.size(), false);
  for (auto idx : strict) is_strict[idx] = true;
  for (std::size_t i = 0; i < lp.g.size(); ++i) lp.g[i].push_back(is_strict[i] ? 1 : 0);
  std::vector<Rational> cap(k + 1, 0);
  cap[k] = 1;
  lp.g.push_back(cap);
  lp.h.push_back(1);
  lp.c.assign(k + 1, 0);
  lp.c[k] = 1;
  auto core = solve_core(lp);
  if (core.status != LpStatus::Optimal) return std::nullopt;
  core.y.pop_back();
  return SlackSolution{core.value, red->chart.to_ambient(core.y)};
}

std::optional<Point> lp_feasible(const HPolytope& p, std::span<const std::size_t> strict) {
  auto sol = max_min_slack(p, strict);
  if (!sol) return std::nullopt;
  if (!strict.empty() && sgn(sol->slack) <= 0) return std::nullopt;
  return std::move(sol->point);
}

std::vector<std::size_t> implicit_equalities(const HPolytope& p) {
  const std::size_t m = p.inequalities().size();
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  if (!lp_feasible(p)) return all;
  if (lp_feasible(p, all)) return {};
  std::vector<std::size_t> implicit;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t one[] = {i};
    if (!lp_feasible(p, one)) implicit.push_back(i);
  }
  return implicit;
}

std::vector<std::size_t> relint_strict_set(const HPolytope& p) {
  auto implicit = implicit_equalities(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    if (!std::binary_search(implicit.begin(), implicit.end(), i)) out.push_back(i);
  }
  return out;
}

std::optional<Point> relative_interior_point(const HPolytope& p) {
  if (!lp_feasible(p)) return std::nullopt;
  auto strict = relint_strict_set(p);
  return lp_feasible(p, strict);
}

int affine_dim(const HPolytope& p) {
  if (!lp_feasible(p)) return -1;
  Matrix eq;
  for (const auto& c : p.equalities()) eq.push_back(c.coeffs);
  for (auto i : implicit_equalities(p)) eq.push_back(p.inequalities()[i].coeffs);
  return static_cast<int>(p.ambient_dim() - rank(eq));
}

HPolytope remove_redundant(const HPolytope& p) {
  std::vector<bool> keep(p.inequalities().size(), true);
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    HPolytope rest(p.vars());
    for (const auto& c : p.equalities()) rest.add(c);
    for (std::size_t j = 0; j < p.inequalities().size(); ++j) {
      if (j != i && keep[j]) rest.add(p.inequalities()[j]);
    }
    const Constraint& c = p.inequalities()[i];
    auto sol = maximize(rest, c.coeffs);
    if (sol.status == LpStatus::Infeasible || (sol.status == LpStatus::Optimal && sol.value <= c.rhs)) keep[i] = false;
  }
  HPolytope out(p.vars());
  for (const auto& c : p.equalities()) out.add(c);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) out.add(p.inequalities()[i]);
  }
  return out;
}

}  // namespace burniat
