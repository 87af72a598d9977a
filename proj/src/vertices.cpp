#include "burniat/vertices.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "burniat/errors.hpp"
#include "burniat/linalg.hpp"
#include "burniat/lp.hpp"

namespace burniat {

namespace {

using IntVec = std::vector<Integer>;
using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVec coords;
  Bits zeros;  // constraints (by row index) on which the ray is tight
};

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Extreme rays of the pointed cone {z : rows z <= 0}; rows has full column rank.
std::vector<Ray> double_description(const IntMatrix& rows, const std::vector<std::size_t>& initial) {
  const std::size_t d = rows[0].size();
  const std::size_t m = rows.size();

  // Initial simplicial cone: rays are minus the columns of the inverse.
  Matrix sub;
  for (auto i : initial) {
    std::vector<Rational> r;
    for (const auto& x : rows[i]) r.emplace_back(x);
    sub.push_back(std::move(r));
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    // Solve sub * z = -e_j via Cramer-free elimination on [sub | -e_j].
    Matrix aug = sub;
    for (std::size_t i = 0; i < d; ++i) aug[i].push_back(i == j ? -1 : 0);
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (sgn(aug[piv][c]) == 0) ++piv;
      std::swap(aug[piv], aug[c]);
      Rational inv = 1 / aug[c][c];
      for (auto& v : aug[c]) v *= inv;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == c || sgn(aug[i][c]) == 0) continue;
        Rational f = aug[i][c];
        for (std::size_t k = c; k <= d; ++k) aug[i][k] -= f * aug[c][k];
      }
    }
    std::vector<Rational> z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = aug[i][d];
    Integer den = common_denominator(z);
    Ray r{IntVec(d), Bits(m)};
    for (std::size_t i = 0; i < d; ++i) r.coords[i] = z[i].get_num() * (den / z[i].get_den());
    make_primitive(r.coords);
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) r.zeros.set(initial[k]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(m, false);
  for (auto i : initial) done[i] = true;
  for (std::size_t row = 0; row < m; ++row) {
    if (done[row]) continue;
    done[row] = true;
    std::vector<std::size_t> pos, neg, zero;
    std::vector<Integer> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[row], rays[r].coords);
      int s = sgn(val[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    if (pos.empty()) {
      for (auto r : zero) rays[r].zeros.set(row);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(neg.size() + zero.size());
    for (auto r : neg) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zeros.set(row);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[n]; the combination is tight on `row`.
        Ray nr{IntVec(d), common};
        for (std::size_t k = 0; k < d; ++k) nr.coords[k] = val[p] * rays[n].coords[k] - val[n] * rays[p].coords[k];
        make_primitive(nr.coords);
        nr.zeros.set(row);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

VertexSet enumerate_vertices(const HPolytope& p) {
  VertexSet out;
  auto chart = affine_chart(p.equalities(), p.ambient_dim());
  if (!chart) return out;
  const std::size_t k = chart->dim();
  const auto& ineqs = p.inequalities();

  auto finish = [&](std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out.vertices = std::move(pts);
    for (const auto& v : out.vertices) {
      std::vector<bool> tight(ineqs.size());
      for (std::size_t i = 0; i < ineqs.size(); ++i) tight[i] = ineqs[i].evaluate(v) == ineqs[i].rhs;
      out.incidence.push_back(std::move(tight));
    }
    return out;
  };

  if (k == 0) {
    if (p.contains(chart->origin)) return finish({chart->origin});
    return out;
  }

  // Homogenized rows over (y, t): (g_i, -h_i) z <= 0, plus -t <= 0 first.
  IntMatrix rows;
  {
    IntVec t_row(k + 1, 0);
    t_row[k] = -1;
    rows.push_back(std::move(t_row));
  }
  for (const auto& c : ineqs) {
    std::vector<Rational> row(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (sgn(c.coeffs[i]) != 0 && chart->basis[j][i] != 0) row[j] += c.coeffs[i] * Rational(chart->basis[j][i]);
      }
    }
    row[k] = -(c.rhs - c.evaluate(chart->origin));
    rows.push_back(integer_row(row));
  }

  Matrix rational_rows;
  for (const auto& r : rows) {
    std::vector<Rational> q;
    for (const auto& x : r) q.emplace_back(x);
    rational_rows.push_back(std::move(q));
  }
  auto initial = independent_rows(rational_rows);
  if (initial.size() < k + 1) {
    // The homogenized cone has a lineality space: P is empty or unbounded.
    if (lp_feasible(p)) throw UnboundedError();
    return out;
  }

  auto rays = double_description(rows, initial);
  std::vector<Point> pts;
  bool recession = false;
  for (const auto& r : rays) {
    if (r.coords[k] == 0) {
      recession = true;
      continue;
    }
    Point y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = Rational(r.coords[j], r.coords[k]);
    for (auto& v : y) v.canonicalize();
    pts.push_back(chart->to_ambient(y));
  }
  if (!pts.empty() && recession) throw UnboundedError();
  return finish(std::move(pts));
}

}  // namespace burniat
