#include "doctest.h"

#include <algorithm>
#include <random>

#include "burniat/burniat.hpp"
#include "burniat/errors.hpp"
#include "burniat/hypersimplex.hpp"
#include "burniat/lp.hpp"
#include "burniat/tiling.hpp"
#include "burniat/vertices.hpp"
#include "burniat/volume.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

const char* const kAmbients[] = {"bur6", "bur5", "bur4-nodal", "bur4-nonnodal", "bur3"};

HPolytope ambient(const char* name) { return burniat_polytope(BurniatAmbient::from_name(name)); }

// P ⊆ Q through LP implication of each row of Q.
bool implies(const HPolytope& p, const HPolytope& q) {
  for (const auto& c : q.inequalities()) {
    auto s = maximize(p, c.coeffs);
    if (s.status != LpStatus::Optimal || s.value > c.rhs) return false;
  }
  for (const auto& c : q.equalities()) {
    auto hi = maximize(p, c.coeffs);
    auto lo = minimize(p, c.coeffs);
    if (hi.value != c.rhs || lo.value != c.rhs) return false;
  }
  return true;
}

// The same inclusion through the vertices of P.
bool vertices_inside(const HPolytope& p, const HPolytope& q) {
  for (const auto& v : enumerate_vertices(p).vertices) {
    if (!q.contains(v)) return false;
  }
  return true;
}

bool same_set(const HPolytope& p, const HPolytope& q) {
  return enumerate_vertices(p).vertices == enumerate_vertices(q).vertices;
}

// Vertex set mapped by a symmetry, compared as a set.
bool maps_onto_itself(const HPolytope& p, const AffineMap& m) {
  auto vs = enumerate_vertices(p).vertices;
  std::vector<Point> image;
  for (const auto& v : vs) image.push_back(m.apply(v));
  std::sort(image.begin(), image.end());
  return image == vs;
}

Constraint row(const std::string& text) {
  return parse_relation(text, 9, burniat_resolver());
}

bool same_constraints(const std::vector<Constraint>& got, const std::vector<std::string>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    Constraint w = row(want[i]);
    if (got[i].coeffs != w.coeffs || got[i].rhs != w.rhs || got[i].relation != w.relation) return false;
  }
  return true;
}

const TilingSpec& find(const std::vector<TilingSpec>& ts, const std::string& name) {
  for (const auto& t : ts) {
    if (t.name == name) return t;
  }
  throw std::runtime_error("no tiling " + name);
}

}  // namespace

TEST_CASE("affine forms of the derived coordinates") {
  Point third(9, oracle::frac(1, 3));
  CHECK(burniat_a3().evaluate(third) == oracle::frac(1, 3));
  CHECK(burniat_b3().evaluate(third) == oracle::frac(1, 3));
  CHECK(burniat_c3().evaluate(third) == oracle::frac(1, 3));
  Point x{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(burniat_a3().evaluate(x) == 7 + 8 + 9 + 4 - 1);
  CHECK(burniat_b3().evaluate(x) == 1 + 2 + 3 + 7 - 1);
  CHECK(burniat_c3().evaluate(x) == 4 + 5 + 6 + 1 - 1);
  CHECK(exceptional_form({1, 1, 1}).evaluate(x) == 2 + 5 + 8 - 1);
  CHECK(exceptional_form({1, 2, 2}).evaluate(x) == 2 + 6 + 9 - 1);
}

TEST_CASE("ambient constructors") {
  HPolytope b6 = ambient("bur6");
  CHECK(b6.inequalities().size() == 24);
  CHECK(b6.equalities().size() == 1);
  CHECK(affine_dim(b6) == 8);
  CHECK(b6.contains(Point(9, oracle::frac(1, 3))));

  HPolytope b5 = ambient("bur5");
  CHECK(b5.inequalities().size() == 25);
  auto w = relative_interior_point(b5);
  REQUIRE(w);
  for (const auto& c : b5.inequalities()) CHECK(c.strictly_satisfied_by(*w));
  // (1/3,...,1/3) lies on e = 0.
  Point third(9, oracle::frac(1, 3));
  CHECK(b5.contains(third));
  CHECK(exceptional_form({1, 1, 1}).evaluate(third) == 0);

  CHECK(ambient("bur4-nodal").inequalities().size() == 26);
  CHECK(ambient("bur4-nonnodal").inequalities().size() == 26);
  CHECK(ambient("bur3").inequalities().size() == 27);
  for (const char* name : kAmbients) {
    CHECK(affine_dim(ambient(name)) == 8);
    CHECK(BurniatAmbient::from_name(name).name() == name);
  }

  CHECK(BurniatAmbient::standard(3).triple_points ==
        std::vector<TriplePoint>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(BurniatAmbient::standard(4, BurniatVariant::Nodal).triple_points ==
        std::vector<TriplePoint>{{1, 1, 1}, {1, 2, 2}});
  CHECK_THROWS_AS(BurniatAmbient::standard(5, BurniatVariant::Nodal), InputError);
  CHECK_THROWS_AS(BurniatAmbient::standard(6, BurniatVariant::NonNodal), InputError);
  CHECK_THROWS_AS(BurniatAmbient::standard(7), InputError);
  CHECK_THROWS_AS(BurniatAmbient::from_name("bur4"), InputError);
  CHECK_THROWS_AS(z2_symmetry(BurniatVariant::Plain), InputError);
}

TEST_CASE("nesting of the ambients") {
  HPolytope half = b_cut(hypersimplex(3, burniat_vars()), Weight::uniform(9, oracle::frac(1, 2)));
  const std::pair<const char*, const char*> chain[] = {
      {"bur4-nodal", "bur5"}, {"bur4-nonnodal", "bur5"}, {"bur5", "bur6"}};
  for (const auto& [small, big] : chain) {
    CHECK(implies(ambient(small), ambient(big)));
    CHECK(vertices_inside(ambient(small), ambient(big)));
    CHECK_FALSE(implies(ambient(big), ambient(small)));
  }
  CHECK(implies(ambient("bur6"), half));
  CHECK_FALSE(implies(half, ambient("bur6")));
}

TEST_CASE("bur3 sits in the nodal ambient only after relabeling") {
  // Any two of the three triple points share a line, so dropping one leaves a
  // nodal pair. Swapping C1 and C2 turns {112, 121} into {111, 122}.
  AffineMap swap;
  for (std::size_t i = 0; i < 9; ++i) {
    AffineForm f{std::vector<Rational>(9, 0), 0};
    f.coeffs[i == 7 ? 8 : i == 8 ? 7 : i] = 1;
    swap.images.push_back(f);
  }
  HPolytope b3 = ambient("bur3");
  CHECK(implies(b3, pullback(ambient("bur4-nodal"), swap)));
  CHECK(vertices_inside(b3, pullback(ambient("bur4-nodal"), swap)));
  CHECK(implies(b3, pullback(ambient("bur5"), swap)));
  // Under the standard labels e = a1+b1+c1-1 reaches 1/2 on bur3.
  auto s = maximize(b3, exceptional_form({1, 1, 1}).coeffs);
  CHECK(s.value + exceptional_form({1, 1, 1}).constant == oracle::frac(1, 2));
  CHECK_FALSE(implies(b3, ambient("bur4-nodal")));
  CHECK_FALSE(implies(b3, ambient("bur4-nonnodal")));
  CHECK(implies(b3, ambient("bur6")));
}

TEST_CASE("vertex counts agree with brute force") {
  for (const char* name : {"bur6", "bur5"}) {
    HPolytope p = ambient(name);
    CHECK(enumerate_vertices(p).vertices == oracle::brute_force_vertices(p));
  }
  // Counts frozen from an independent double-description run (pycddlib).
  CHECK(enumerate_vertices(ambient("bur6")).size() == 48);
  CHECK(enumerate_vertices(ambient("bur5")).size() == 40);
  CHECK(enumerate_vertices(ambient("bur4-nodal")).size() == 43);
  CHECK(enumerate_vertices(ambient("bur4-nonnodal")).size() == 21);
  CHECK(enumerate_vertices(ambient("bur3")).size() == 32);
  CHECK(enumerate_vertices(ambient("bur5")).vertices.front() ==
        Point{0, 0, oracle::frac(1, 2), 0, oracle::frac(1, 2), oracle::frac(1, 2), oracle::frac(1, 2),
              oracle::frac(1, 2), oracle::frac(1, 2)});
}

TEST_CASE("normalized volumes of the ambients") {
  // Frozen from a floating convex-hull volume times 8!, rounded against the
  // common denominator, and matched by both apex orders here.
  const std::pair<const char*, Rational> expected[] = {
      {"bur6", oracle::frac(837, 128)},       {"bur5", oracle::frac(675, 256)},
      {"bur4-nodal", oracle::frac(2077, 2048)}, {"bur4-nonnodal", oracle::frac(57, 128)},
      {"bur3", oracle::frac(1299, 4096)}};
  for (const auto& [name, vol] : expected) {
    CHECK(normalized_volume(ambient(name), TriangulationOrder::Lexicographic) == vol);
    CHECK(normalized_volume(ambient(name), TriangulationOrder::Reverse) == vol);
  }
}

TEST_CASE("symmetries") {
  HPolytope b5 = ambient("bur5");
  CHECK(maps_onto_itself(b5, cyclic_symmetry()));
  CHECK(maps_onto_itself(b5, cremona_symmetry()));
  CHECK(maps_onto_itself(ambient("bur6"), cyclic_symmetry()));
  CHECK(maps_onto_itself(ambient("bur6"), cremona_symmetry()));
  CHECK(maps_onto_itself(ambient("bur4-nodal"), z2_symmetry(BurniatVariant::Nodal)));
  CHECK(maps_onto_itself(ambient("bur4-nonnodal"), z2_symmetry(BurniatVariant::NonNodal)));
  CHECK(same_set(pullback(b5, cremona_symmetry()), b5));

  // The composite generates a group of order 6 on a generic point.
  std::mt19937 rng(47);
  Point x(9);
  Rational sum = 0;
  for (auto& v : x) {
    v = oracle::frac(1 + static_cast<long>(rng() % 97), 97);
    sum += v;
  }
  // The maps only commute with the derived forms on the plane sum = 3.
  for (auto& v : x) v *= 3 / sum;
  auto step = [](const Point& p) { return cremona_symmetry().apply(cyclic_symmetry().apply(p)); };
  Point y = x;
  int order = 0;
  do {
    y = step(y);
    ++order;
  } while (y != x && order < 12);
  CHECK(order == 6);
  // Cremona is an involution, the cyclic map has order 3.
  CHECK(cremona_symmetry().apply(cremona_symmetry().apply(x)) == x);
  Point z = cyclic_symmetry().apply(cyclic_symmetry().apply(cyclic_symmetry().apply(x)));
  CHECK(z == x);
}

TEST_CASE("forced boundary on bur5") {
  HPolytope p = intersect(ambient("bur5"), ambient("bur5"));
  p.add(row("a0 a1 a2 b1 <= 1"));
  CHECK(affine_dim(p) < 8);
  auto vs = enumerate_vertices(p).vertices;
  REQUIRE_FALSE(vs.empty());
  for (const auto& v : vs) {
    CHECK(v[5] == oracle::frac(1, 2));
    CHECK(burniat_a3().evaluate(v) == oracle::frac(1, 2));
  }
}

TEST_CASE("shipped tables parse") {
  auto t1 = load_table(oracle::data("table1.tiling"));
  auto t2 = load_table(oracle::data("table2.tiling"));
  auto t3 = load_table(oracle::data("table3.tiling"));
  auto ap = load_table(oracle::data("ap09_table2.tiling"));
  CHECK(t1.size() == 6);
  CHECK(t2.size() == 8);
  CHECK(t3.size() == 2);
  CHECK(ap.size() == 5);

  const TilingSpec& r1 = find(t1, "t1-1");
  CHECK(r1.ambient.name() == "bur5");
  REQUIRE(r1.pieces.size() == 3);
  CHECK(r1.pieces[0].name == "M1");
  CHECK(same_constraints(r1.pieces[0].constraints, {"a0 + a2 + b2 <= 1", "b2 + b3 + c2 <= 1"}));
  CHECK(same_constraints(r1.pieces[1].constraints, {"a1 + c0 + c2 <= 1", "a1 + a3 + b1 <= 1"}));
  CHECK(same_constraints(r1.pieces[2].constraints, {"a2 + c1 + c3 <= 1", "b0 + b3 + c1 <= 1"}));
  // b3 expands: b2 + (a0 + a1 + a2 + c0 - 1) + c2 <= 1.
  CHECK(r1.pieces[0].constraints[1].coeffs == std::vector<Rational>{1, 1, 1, 0, 0, 1, 1, 0, 1});
  CHECK(r1.pieces[0].constraints[1].rhs == 2);

  const TilingSpec& r6 = find(t1, "t1-6");
  REQUIRE(r6.pieces.size() == 2);
  CHECK(same_constraints(r6.pieces[0].constraints, {"a1 + a2 + b1 + b2 + c1 + c2 <= 2"}));
  CHECK(find(t3, "t3-1").pieces.size() == 2);
  CHECK(find(t3, "t3-1").ambient.name() == "bur3");
  for (int i = 1; i <= 5; ++i) CHECK(find(t2, "t2-" + std::to_string(i)).ambient.name() == "bur4-nodal");
  for (int i = 6; i <= 8; ++i) CHECK(find(t2, "t2-" + std::to_string(i)).ambient.name() == "bur4-nonnodal");
  CHECK(find(ap, "ap09-5").partial);
  CHECK_FALSE(find(ap, "ap09-10").partial);

  // Each piece is Delta(3,9) cut by its rows.
  HPolytope piece = r1.piece_polytope(0);
  CHECK(piece.equalities().size() == 1);
  CHECK(piece.inequalities().size() == 18 + 2);
}

TEST_CASE("tiling files round-trip") {
  for (const char* file : {"table1.tiling", "table2.tiling", "table3.tiling", "ap09_table2.tiling"}) {
    auto ts = load_table(oracle::data(file));
    const std::string text = write_tilings(ts);
    CHECK(write_tilings(parse_tilings(text)) == text);
  }
}

TEST_CASE("tiling parse errors carry positions") {
  auto expect_error = [](const std::string& text, int line, int column) {
    try {
      parse_tilings(text);
      FAIL("expected an error for: " << text);
    } catch (const InputError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect_error("tiling x ambient=bur5\npiece M1: a0 d2 <= 1\n", 2, 14);
  expect_error("tiling x ambient=bur7\n", 1, 10);
  expect_error("piece M1: a0 <= 1\n", 1, 1);
  expect_error("tiling x ambient=bur5\npiece M1 a0 <= 1\n", 2, 1);
  expect_error("tiling x ambient=bur5\nrow: a0 <= 1;; b0 <= 1\n", 2, 14);
  // A trailing ';' continues the row on the next printed line.
  CHECK(parse_tilings("tiling x ambient=bur5\nrow: a0 a1 <= 1;\n").front().pieces.size() == 1);
  CHECK(parse_tilings("# only a comment\n").empty());
}

TEST_CASE("restriction examples") {
  auto ap = load_table(oracle::data("ap09_table2.tiling"));
  const BurniatAmbient bur5 = BurniatAmbient::from_name("bur5");

  Restriction r10 = restrict_tiling(find(ap, "ap09-10"), bur5);
  REQUIRE(r10.dropped.size() == 1);
  CHECK(r10.dropped[0].name == "M3");
  CHECK(r10.dropped[0].max_slack <= 0);
  CHECK_FALSE(r10.dropped[0].empty);
  CHECK(r10.tiling.pieces.size() == 2);
  CHECK(r10.tiling.ambient.name() == "bur5");

  // Restricted #10 matches t1-6 piece by piece on bur5.
  auto t1 = load_table(oracle::data("table1.tiling"));
  const TilingSpec& row6 = find(t1, "t1-6");
  for (std::size_t i = 0; i < 2; ++i) {
    HPolytope a = intersect(r10.tiling.piece_polytope(i), r10.tiling.ambient_polytope());
    HPolytope b = intersect(row6.piece_polytope(i), row6.ambient_polytope());
    CHECK(same_set(a, b));
  }

  Restriction r8 = restrict_tiling(find(ap, "ap09-8"), bur5);
  REQUIRE(r8.dropped.size() == 1);
  CHECK(r8.dropped[0].name == "M2");
  REQUIRE(r8.tiling.pieces.size() == 1);
  CHECK(implies(ambient("bur5"), r8.tiling.piece_polytope(0)));

  Restriction r2 = restrict_tiling(find(ap, "ap09-2"), bur5);
  CHECK(r2.dropped.empty());
  CHECK(r2.tiling.pieces.size() == 3);

  Restriction same = restrict_tiling(find(ap, "ap09-2"), BurniatAmbient::from_name("bur6"));
  CHECK(same.dropped.empty());
  CHECK(write_tilings({same.tiling}) == write_tilings({find(ap, "ap09-2")}));

  CHECK_THROWS_AS(restrict_tiling(find(ap, "ap09-2"), BurniatAmbient::from_name("bur3")), InputError);
  CHECK_THROWS_AS(restrict_tiling(find(t1, "t1-1"), BurniatAmbient::from_name("bur6")), InputError);
}
