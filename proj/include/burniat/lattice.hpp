#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

/// dH - sum m_i E_i on Bl_k P^2, k = m.size().
struct DivClass {
  long long d = 0;
  std::vector<long long> m;

  std::size_t k() const { return m.size(); }
  bool operator==(const DivClass&) const = default;
  auto operator<=>(const DivClass&) const = default;
};

/// Rational coefficients, for Q-divisors such as K + D.
struct QDivClass {
  Rational d;
  std::vector<Rational> m;

  QDivClass() = default;
  QDivClass(Rational d_, std::vector<Rational> m_) : d(std::move(d_)), m(std::move(m_)) {}
  explicit QDivClass(const DivClass& c);
  std::size_t k() const { return m.size(); }
  bool operator==(const QDivClass&) const = default;
};

DivClass operator+(const DivClass& x, const DivClass& y);
DivClass operator-(const DivClass& x, const DivClass& y);
DivClass operator*(long long s, const DivClass& x);
QDivClass operator+(const QDivClass& x, const QDivClass& y);
QDivClass operator*(const Rational& s, const QDivClass& x);

/// dd' - sum m_i m_i'. Throws InputError when k differs.
long long intersect_classes(const DivClass& x, const DivClass& y);
Rational intersect_classes(const QDivClass& x, const QDivClass& y);

DivClass hyperplane_class(std::size_t k);
DivClass exceptional_class(std::size_t k, std::size_t i);
/// K = (-3; -1, ..., -1).
DivClass canonical_class(std::size_t k);

/// "(d;m1,...,mk)".
std::string to_string(const DivClass& c);
std::string to_string(const QDivClass& c);
/// Accepts "d; m1 m2 ..." and "(d;m1,m2,...)".
DivClass parse_class(std::string_view text);

/// All classes with C^2 = self_int and C.K = -1 (self_int = -1) or 0
/// (self_int = -2), degree 0 <= d <= max_degree, sorted. Throws InputError
/// for k > 8 or other self-intersections.
std::vector<DivClass> enumerate_neg_curves(std::size_t k, int self_int, int max_degree = 6);

/// Blown-up points with explicit incidences: each listed line passes through
/// the given points (at least 3), each listed conic through 6.
struct PointConfiguration {
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> lines;
  std::vector<std::vector<std::size_t>> conics;

  std::size_t k() const { return points.size(); }
  /// Classes of the listed lines and conics.
  std::vector<DivClass> incidence_curves() const;
  /// Irreducible (-2)-curves among the incidence curves.
  std::vector<DivClass> minus_two_curves() const;
  /// Effective (-2)-classes: positive roots spanned by the (-2)-curves.
  std::vector<DivClass> effective_roots() const;
  /// (-1)-classes that are irreducible curves: effective and nonnegative on
  /// every (-2)-curve.
  std::vector<DivClass> minus_one_curves() const;
};

/// The Burniat incidence patterns "d6", "d5", "d4-nodal", "d4-nonnodal",
/// "d3"; points ordered A, B, C, then P1, P2, ...
PointConfiguration burniat_configuration(std::string_view name);

enum class Positivity { Ample, NefNotAmple, NotNef };

struct NefReport {
  Positivity verdict = Positivity::Ample;
  std::vector<DivClass> zero_classes;
  std::optional<DivClass> negative_class;
  Rational self_intersection;
};

/// Signs of D against the (-1)-curves, the incidence curves, the pencils
/// H - E_i and H.
NefReport nef_ample_report(const PointConfiguration& config, const QDivClass& d);
std::string format_nef_report(const NefReport& r);

}  // namespace burniat
