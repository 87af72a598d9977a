#include "burniat/hypersimplex.hpp"

#include "burniat/errors.hpp"
#include "burniat/lp.hpp"

namespace burniat {

HPolytope hypersimplex(int r, int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return hypersimplex(r, vars);
}

HPolytope hypersimplex(int r, const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  if (r <= 0 || r >= n) throw InputError("hypersimplex needs 1 <= r < n");
  HPolytope p(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Constraint lo{std::vector<Rational>(vars.size()), 0, Relation::LessEqual};
    lo.coeffs[i] = -1;
    p.add(std::move(lo));
    Constraint hi{std::vector<Rational>(vars.size()), 1, Relation::LessEqual};
    hi.coeffs[i] = 1;
    p.add(std::move(hi));
  }
  p.add(Constraint{std::vector<Rational>(vars.size(), 1), r, Relation::Equal});
  return p;
}

HPolytope b_cut(const HPolytope& delta, const Weight& w) {
  if (w.size() != delta.ambient_dim()) throw InputError("weight length does not match variable count");
  HPolytope p = delta;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Constraint c{std::vector<Rational>(w.size()), w[i], Relation::LessEqual};
    c.coeffs[i] = 1;
    p.add(std::move(c));
  }
  return p;
}

HPolytope face_at_point(const HPolytope& delta_b, const IndexSet& incident, const Weight& w) {
  HPolytope p = delta_b;
  for (auto i : incident) {
    if (i >= p.ambient_dim() || i >= w.size()) throw InputError("incidence index out of range");
    Constraint c{std::vector<Rational>(p.ambient_dim()), w[i], Relation::Equal};
    c.coeffs[i] = 1;
    p.add(std::move(c));
  }
  return p;
}

HPolytope matroid_polytope_from_arrangement(const ArrangementSpec& a) {
  HPolytope p = hypersimplex(static_cast<int>(a.r()), a.names());
  for (auto flat : a.dependent_flats()) {
    Constraint c{std::vector<Rational>(a.n()), static_cast<long>(a.rank(flat)), Relation::LessEqual};
    for (auto i : to_indices(flat)) c.coeffs[i] = 1;
    p.add(std::move(c));
  }
  return remove_redundant(p);
}

HPolytope matroid_polytope_from_inequalities(int r, const std::vector<std::string>& vars,
                                             const std::vector<Constraint>& rows) {
  HPolytope p = hypersimplex(r, vars);
  for (const auto& c : rows) p.add(c);
  return remove_redundant(p);
}

}  // namespace burniat
