#include "burniat/burniat.hpp"

#include "burniat/errors.hpp"
#include "burniat/hypersimplex.hpp"

namespace burniat {

namespace {

std::size_t var(std::string_view name) {
  const auto& vars = burniat_vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  throw InputError("unknown Burniat coordinate '" + std::string(name) + "'");
}

AffineForm form(std::initializer_list<std::string_view> names, long constant) {
  AffineForm f{std::vector<Rational>(9, 0), constant};
  for (auto n : names) f.coeffs[var(n)] += 1;
  return f;
}

AffineForm coordinate(std::string_view name) { return form({name}, 0); }

AffineMap permutation_map(const std::vector<std::pair<std::string, std::string>>& swaps_to_from) {
  AffineMap m;
  for (const auto& v : burniat_vars()) m.images.push_back(coordinate(v));
  for (const auto& [to, from] : swaps_to_from) m.images[var(to)] = coordinate(from);
  return m;
}

}  // namespace

const std::vector<std::string>& burniat_vars() {
  static const std::vector<std::string> vars{"a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2"};
  return vars;
}

AffineForm burniat_a3() { return form({"c0", "c1", "c2", "b0"}, -1); }
AffineForm burniat_b3() { return form({"a0", "a1", "a2", "c0"}, -1); }
AffineForm burniat_c3() { return form({"b0", "b1", "b2", "a0"}, -1); }

AffineForm exceptional_form(const TriplePoint& t) {
  for (int i : t) {
    if (i < 1 || i > 2) throw InputError("triple points use lines with index 1 or 2");
  }
  return form({"a" + std::to_string(t[0]), "b" + std::to_string(t[1]), "c" + std::to_string(t[2])}, -1);
}

BurniatAmbient BurniatAmbient::standard(int degree, std::optional<BurniatVariant> variant) {
  BurniatAmbient a;
  a.degree = degree;
  if (degree != 4 && variant && *variant != BurniatVariant::Plain) {
    throw InputError("variant only applies to degree 4");
  }
  switch (degree) {
    case 6:
      break;
    case 5:
      a.triple_points = {{1, 1, 1}};
      break;
    case 4:
      if (!variant || *variant == BurniatVariant::Plain) throw InputError("degree 4 needs the nodal or non-nodal variant");
      a.variant = *variant;
      if (*variant == BurniatVariant::Nodal) {
        a.triple_points = {{1, 1, 1}, {1, 2, 2}};
      } else {
        a.triple_points = {{1, 1, 1}, {2, 2, 2}};
      }
      break;
    case 3:
      a.triple_points = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
      break;
    default:
      throw InputError("Burniat degree must be 3, 4, 5 or 6");
  }
  return a;
}

BurniatAmbient BurniatAmbient::from_name(std::string_view name) {
  if (name == "bur6") return standard(6);
  if (name == "bur5") return standard(5);
  if (name == "bur4-nodal") return standard(4, BurniatVariant::Nodal);
  if (name == "bur4-nonnodal") return standard(4, BurniatVariant::NonNodal);
  if (name == "bur3") return standard(3);
  throw InputError("unknown ambient '" + std::string(name) + "' (expected bur6, bur5, bur4-nodal, bur4-nonnodal, bur3)");
}

std::string BurniatAmbient::name() const {
  std::string base = "bur" + std::to_string(degree);
  if (variant == BurniatVariant::Nodal) return base + "-nodal";
  if (variant == BurniatVariant::NonNodal) return base + "-nonnodal";
  return base;
}

SymbolResolver burniat_resolver() {
  return [](std::string_view name) -> std::optional<AffineForm> {
    if (name == "a3") return burniat_a3();
    if (name == "b3") return burniat_b3();
    if (name == "c3") return burniat_c3();
    if (name == "e") return form({"a1", "b1", "c1"}, -1);
    const auto& vars = burniat_vars();
    for (const auto& v : vars) {
      if (v == name) return coordinate(v);
    }
    return std::nullopt;
  };
}

HPolytope burniat_hypersimplex() { return hypersimplex(3, burniat_vars()); }

HPolytope burniat_polytope(const BurniatAmbient& ambient) {
  HPolytope p(burniat_vars());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < 9; ++i) {
    Constraint lo{std::vector<Rational>(9), 0, Relation::LessEqual};
    lo.coeffs[i] = -1;
    p.add(std::move(lo));
    Constraint hi{std::vector<Rational>(9), half, Relation::LessEqual};
    hi.coeffs[i] = 1;
    p.add(std::move(hi));
  }
  p.add(Constraint{std::vector<Rational>(9, 1), 3, Relation::Equal});
  // 0 <= f <= 1/2 for the derived coordinates.
  for (const auto& f : {burniat_a3(), burniat_b3(), burniat_c3()}) {
    Constraint lo{f.coeffs, f.constant, Relation::LessEqual};
    for (auto& c : lo.coeffs) c = -c;
    p.add(std::move(lo));
    p.add(Constraint{f.coeffs, half - f.constant, Relation::LessEqual});
  }
  for (const auto& t : ambient.triple_points) {
    AffineForm e = exceptional_form(t);
    p.add(Constraint{e.coeffs, -e.constant, Relation::LessEqual});
  }
  return p;
}

HPolytope burniat_polytope(int degree, std::optional<BurniatVariant> variant) {
  return burniat_polytope(BurniatAmbient::standard(degree, variant));
}

Point AffineMap::apply(const Point& x) const {
  Point y;
  y.reserve(images.size());
  for (const auto& f : images) y.push_back(f.evaluate(x));
  return y;
}

HPolytope pullback(const HPolytope& p, const AffineMap& map) {
  if (map.images.size() != p.ambient_dim()) throw InputError("map dimension does not match polytope");
  HPolytope out(p.vars());
  auto pull = [&](const Constraint& c) {
    Constraint r{std::vector<Rational>(p.ambient_dim(), 0), c.rhs, c.relation};
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      if (sgn(c.coeffs[i]) == 0) continue;
      for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] += c.coeffs[i] * map.images[i].coeffs[j];
      r.rhs -= c.coeffs[i] * map.images[i].constant;
    }
    return r;
  };
  for (const auto& c : p.equalities()) out.add(pull(c));
  for (const auto& c : p.inequalities()) out.add(pull(c));
  return out;
}

AffineMap cyclic_symmetry() {
  // The new b_i is the old a_i, and so on.
  return permutation_map({{"b0", "a0"}, {"b1", "a1"}, {"b2", "a2"},
                          {"c0", "b0"}, {"c1", "b1"}, {"c2", "b2"},
                          {"a0", "c0"}, {"a1", "c1"}, {"a2", "c2"}});
}

AffineMap cremona_symmetry() {
  AffineMap m = permutation_map({});
  m.images[var("a0")] = burniat_a3();
  m.images[var("b0")] = burniat_b3();
  m.images[var("c0")] = burniat_c3();
  return m;
}

AffineMap z2_symmetry(BurniatVariant variant) {
  switch (variant) {
    case BurniatVariant::Nodal:
      return permutation_map({{"b1", "b2"}, {"b2", "b1"}, {"c1", "c2"}, {"c2", "c1"}});
    case BurniatVariant::NonNodal:
      return permutation_map({{"a1", "a2"}, {"a2", "a1"}, {"b1", "b2"}, {"b2", "b1"}, {"c1", "c2"}, {"c2", "c1"}});
    default:
      throw InputError("the Z2 symmetry is defined for the degree-4 variants only");
  }
}

}  // namespace burniat
