#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

enum class Relation { LessEqual, Equal };

/// coeffs · x  (relation)  rhs, with coeffs dense over the owning system's variables.
struct Constraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  Relation relation = Relation::LessEqual;

  Rational evaluate(const Point& x) const;
  bool satisfied_by(const Point& x) const;
  /// Strict satisfaction; only meaningful for inequalities.
  bool strictly_satisfied_by(const Point& x) const;
  bool is_zero() const;
  /// Positive multiple with coprime integer coefficients and rhs.
  Constraint integer_cleared() const;
};

/// An affine functional  coeffs · x + constant.
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  Rational evaluate(const Point& x) const;
};

/// Resolves a symbol of the expression grammar to an affine form over the
/// system's variables, or nullopt when the symbol is unknown.
using SymbolResolver = std::function<std::optional<AffineForm>(std::string_view)>;

/// A polyhedron given by linear equalities and inequalities over named
/// variables. Values are immutable once built; every predicate is
/// insensitive to constraint order.
class HPolytope {
 public:
  HPolytope() = default;
  explicit HPolytope(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t ambient_dim() const { return vars_.size(); }
  const std::vector<Constraint>& equalities() const { return equalities_; }
  const std::vector<Constraint>& inequalities() const { return inequalities_; }

  /// Index of a variable; throws InputError for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool has_var(std::string_view name) const;

  /// Adds a constraint; rejects wrong widths and the trivially-true 0 <= c.
  void add(Constraint c);
  void add_less_equal(const std::map<std::string, Rational>& coeffs, const Rational& rhs);
  void add_equal(const std::map<std::string, Rational>& coeffs, const Rational& rhs);

  bool contains(const Point& x) const;

  /// Symbols resolve to the system's own variables.
  SymbolResolver variable_resolver() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Constraint> equalities_;
  std::vector<Constraint> inequalities_;
};

/// Constraint-system union (point-set intersection). Throws InputError
/// when the variable lists differ.
HPolytope intersect(const HPolytope& p, const HPolytope& q);

/// Parses one relation such as "a0 + a2 + b2 <= 1", "2 x - 1/2*y = 3" or the
/// juxtaposed shorthand "a1 a3 b1 <= 1". ">=" is accepted and negated.
/// Throws InputError carrying the column (1-based) of the offending token.
Constraint parse_relation(std::string_view text, std::size_t n_vars, const SymbolResolver& resolve);

/// Canonical text of a constraint: integer-cleared, terms in variable order.
std::string format_constraint(const Constraint& c, const std::vector<std::string>& vars);

/// Line format: "vars x y z" header, then one relation per line. '#' starts
/// a comment. Errors carry line and column.
HPolytope parse_polytope(std::string_view text);
HPolytope read_polytope_file(const std::string& path);
std::string serialize_polytope(const HPolytope& p);

}  // namespace burniat
