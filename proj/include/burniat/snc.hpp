#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

/// Picard lattice of a component: coordinates, Gram matrix and K.
/// P2: (d). Bl<k>P2: (d; m1..mk) with dH - sum m_i E_i; F1 = Bl1P2.
/// F0: (a; b) meaning a f1 + b f2 with f1.f2 = 1, f_i^2 = 0.
struct SurfaceLattice {
  std::string kind;
  std::vector<std::vector<long long>> gram;
  std::vector<long long> canonical;

  static SurfaceLattice from_kind(std::string_view kind);
  std::size_t rank() const { return canonical.size(); }
  Rational pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

using LatticeVector = std::vector<Rational>;

struct Component {
  std::string name;
  SurfaceLattice lattice;
  std::map<std::string, LatticeVector> classes;
  std::map<std::string, LatticeVector> divisors;
  std::vector<std::string> class_order;
};

struct DoubleCurve {
  std::string comp_i, class_i, comp_j, class_j;
  long long p3 = 0;
  int line = 0;
};

struct AdjointQuery {
  std::string comp, divisor, locus;
  std::vector<std::string> curves;  // empty: every named class
};

struct SncFiber {
  std::vector<Component> components;
  std::vector<DoubleCurve> doubles;
  std::vector<AdjointQuery> queries;

  const Component& component(std::string_view name) const;
};

struct TriplePointCheck {
  std::size_t index = 0;
  Rational left, right;  // self-intersections on the two sides
  long long p3 = 0;
  bool ok = false;
};

/// (C|Y_i)^2 + (C|Y_j)^2 + p3 = 0 for every double curve.
std::vector<TriplePointCheck> check_triple_point_formula(const SncFiber& f);

/// (K_Y + D| + double locus) . C on component `comp`. Throws InputError on a
/// lattice mismatch.
Rational adjoint_degree(const SncFiber& f, std::string_view comp, const LatticeVector& c,
                        const LatticeVector& d_restriction, const LatticeVector& double_locus);

/// Text format:
///   component <name> P2|F0|F1|Bl<k>P2
///   class <name> = d; m1 ... mk          (scoped to the last component)
///   divisor <name> = 1/2 A1 + C0 - E      (combination of classes)
///   double <comp>:<class> <comp>:<class> p3=<n>
///   adjoint <comp> <divisor> <locus-divisor> [curve ...]
SncFiber parse_snc(std::string_view text);
SncFiber read_snc_file(const std::string& path);

/// Report lines for every double curve and adjoint query; ok is false when
/// some triple-point check fails.
std::string format_snc_report(const SncFiber& f, bool& ok);

}  // namespace burniat
