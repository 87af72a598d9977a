#include "burniat/linalg.hpp"

#include <utility>

namespace burniat {

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c + 1; j < n; ++j) {
        if (sgn(m[c][j]) != 0) m[i][j] -= f * m[c][j];
      }
    }
  }
  return det;
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
  std::vector<std::size_t> chosen;
  Matrix basis;
  for (std::size_t i = 0; i < m.size(); ++i) {
    basis.push_back(m[i]);
    if (rank(basis) == basis.size()) {
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n) {
  IntMatrix a = rows;
  // u[j] is column j of the unimodular transform.
  IntMatrix u(n, std::vector<Integer>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (std::size_t k = 0; k < n; ++k) u[dst][k] -= q * u[src][k];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    std::swap(u[x], u[y]);
  };
  std::size_t p = 0;
  for (std::size_t i = 0; i < a.size() && p < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = p; j < n; ++j) {
        if (a[i][j] != 0 && (best == n || abs(a[i][j]) < abs(a[i][best]))) best = j;
      }
      if (best == n) break;
      if (best != p) col_swap(best, p);
      bool done = true;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][p].get_mpz_t());
        col_sub(j, p, q);
        if (a[i][j] != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  return IntMatrix(u.begin() + static_cast<std::ptrdiff_t>(p), u.end());
}

Point AffineChart::to_ambient(const Point& local) const {
  Point x = origin;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(local[j]) == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (basis[j][i] != 0) x[i] += local[j] * Rational(basis[j][i]);
    }
  }
  return x;
}

std::vector<Integer> integer_row(const std::vector<Rational>& coeffs) {
  Integer den = common_denominator(coeffs);
  std::vector<Integer> row;
  row.reserve(coeffs.size());
  for (const auto& c : coeffs) row.push_back(c.get_num() * (den / c.get_den()));
  return row;
}

std::optional<AffineChart> affine_chart(const std::vector<Constraint>& equalities, std::size_t n) {
  AffineChart chart;
  chart.origin.assign(n, 0);
  Matrix aug;
  IntMatrix int_rows;
  for (const auto& c : equalities) {
    auto row = c.coeffs;
    row.push_back(c.rhs);
    aug.push_back(std::move(row));
    int_rows.push_back(integer_row(c.coeffs));
  }
  auto pivots = row_reduce(aug, n + 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    chart.origin[pivots[r]] = aug[r][n];
  }
  chart.basis = integer_kernel(int_rows, n);
  return chart;
}

}  // namespace burniat
