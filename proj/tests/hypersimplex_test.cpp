#include "doctest.h"

#include <random>

#include "burniat/errors.hpp"
#include "burniat/hypersimplex.hpp"
#include "burniat/lc.hpp"
#include "burniat/lp.hpp"
#include "burniat/vertices.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

std::vector<std::string> line_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("L" + std::to_string(i));
  return out;
}

ArrangementSpec half_weighted(const std::vector<std::vector<Rational>>& lines) {
  return ArrangementSpec(line_names(lines.size()), lines, Weight::uniform(lines.size(), oracle::frac(1, 2)));
}

// Vertex sets compare as point sets.
bool same_set(const HPolytope& p, const HPolytope& q) {
  return enumerate_vertices(p).vertices == enumerate_vertices(q).vertices;
}

bool subset_of(const HPolytope& p, const HPolytope& q) {
  for (const auto& v : enumerate_vertices(p).vertices) {
    if (!q.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hypersimplex constructor") {
  HPolytope d = hypersimplex(3, 9);
  CHECK(d.inequalities().size() == 18);
  CHECK(d.equalities().size() == 1);
  CHECK(affine_dim(d) == 8);
  CHECK(enumerate_vertices(hypersimplex(1, 2)).vertices == std::vector<Point>{{0, 1}, {1, 0}});
  auto oct = enumerate_vertices(hypersimplex(2, 4));
  CHECK(oct.size() == 6);
  CHECK(oct.vertices == oracle::brute_force_vertices(hypersimplex(2, 4)));
  CHECK_THROWS_AS(hypersimplex(3, 3), InputError);
  CHECK_THROWS_AS(hypersimplex(0, 3), InputError);
  CHECK_THROWS_AS(hypersimplex(-1, 3), InputError);
}

TEST_CASE("b-cut examples") {
  HPolytope d = hypersimplex(3, 9);
  CHECK(same_set(b_cut(d, Weight::uniform(9, 1)), d));
  HPolytope half = b_cut(d, Weight::uniform(9, oracle::frac(1, 2)));
  Point third(9, oracle::frac(1, 3));
  CHECK(half.contains(third));
  for (const auto& c : half.inequalities()) CHECK(c.strictly_satisfied_by(third));
  CHECK(affine_dim(half) == 8);
  CHECK(affine_dim(b_cut(hypersimplex(2, 3), Weight::uniform(3, oracle::frac(1, 2)))) == -1);
  CHECK_THROWS_AS(b_cut(d, Weight::uniform(8, 1)), InputError);
  CHECK_THROWS_AS(Weight({0}), InputError);
  CHECK_THROWS_AS(Weight({oracle::frac(3, 2)}), InputError);
}

TEST_CASE("face at a point") {
  const Weight w = Weight::uniform(9, oracle::frac(1, 2));
  HPolytope db = b_cut(hypersimplex(3, 9), w);
  CHECK(same_set(face_at_point(db, {}, w), db));
  HPolytope six = face_at_point(db, {0, 1, 2, 3, 4, 5}, w);
  auto vs = enumerate_vertices(six);
  REQUIRE(vs.size() == 1);
  Point expected(9, 0);
  for (int i = 0; i < 6; ++i) expected[i] = oracle::frac(1, 2);
  CHECK(vs.vertices[0] == expected);
  CHECK_FALSE(lp_feasible(face_at_point(db, {0, 1, 2, 3, 4, 5, 6}, w)));
  CHECK_THROWS_AS(face_at_point(db, {9}, w), InputError);
}

TEST_CASE("matroid polytopes of explicit arrangements") {
  ArrangementSpec general = read_arrangement_file(oracle::data("arrangements/general9.arr"));
  CHECK(same_set(matroid_polytope_from_arrangement(general), hypersimplex(3, general.names())));

  // Lines 1, 2, 3 through (0:0:1), line 4 general.
  ArrangementSpec four = half_weighted({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  HPolytope bp = matroid_polytope_from_arrangement(four);
  HPolytope expected = hypersimplex(3, four.names());
  expected.add_less_equal({{"L1", 1}, {"L2", 1}, {"L3", 1}}, 2);
  CHECK(same_set(bp, expected));
  CHECK(bp.inequalities().size() < hypersimplex(3, 4).inequalities().size() + 2);

  // Coincident lines 1 and 2.
  ArrangementSpec twin = half_weighted({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  HPolytope tbp = matroid_polytope_from_arrangement(twin);
  for (const auto& v : enumerate_vertices(tbp).vertices) CHECK(v[0] + v[1] <= 1);
  Point both{1, 1, 1, 0};
  CHECK_FALSE(tbp.contains(both));

  CHECK_THROWS_AS(half_weighted({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), InputError);
}

TEST_CASE("matroid polytope from a raw inequality list") {
  HPolytope d = hypersimplex(3, 4);
  Constraint c{{1, 1, 1, 0}, 2, Relation::LessEqual};
  HPolytope bp = matroid_polytope_from_inequalities(3, d.vars(), {c});
  ArrangementSpec four = half_weighted({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(same_set(bp, matroid_polytope_from_arrangement(four)));
}

TEST_CASE("property: matroid polytope agrees with a subset-rank oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 4 + trial % 4;
    auto lines = oracle::random_lines(rng, n);
    ArrangementSpec a = half_weighted(lines);
    HPolytope bp = matroid_polytope_from_arrangement(a);
    HPolytope slow = hypersimplex(3, a.names());
    bool general = true;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      std::vector<std::vector<Rational>> rows;
      std::map<std::string, Rational> sum;
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> i & 1) {
          rows.push_back(lines[i]);
          sum[a.names()[i]] = 1;
        }
      }
      const std::size_t rk = oracle::rank_exact(rows);
      if (rk < std::min<std::size_t>(rows.size(), 3)) {
        slow.add_less_equal(sum, static_cast<long>(rk));
        general = false;
      }
    }
    CHECK(same_set(bp, slow));
    CHECK(subset_of(bp, hypersimplex(3, a.names())));
    CHECK(general == same_set(bp, hypersimplex(3, a.names())));
  }
}

TEST_CASE("property: points of BP are exactly the lc weightings with sum r") {
  std::mt19937 rng(29);
  std::vector<std::vector<std::vector<Rational>>> corpus;
  for (int i = 0; i < 4; ++i) corpus.push_back(oracle::random_lines(rng, 6 + i));
  corpus.push_back({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 0, 1}, {1, 1, 1}});
  int inside = 0;
  int outside = 0;
  for (const auto& lines : corpus) {
    ArrangementSpec a = half_weighted(lines);
    HPolytope bp = matroid_polytope_from_arrangement(a);
    auto bv = enumerate_vertices(bp).vertices;
    for (int k = 0; k < 25; ++k) {
      Point x = oracle::random_hull_point(rng, bv);
      Rational sum = 0;
      for (const auto& v : x) sum += v;
      CHECK(sum == 3);
      CHECK(is_lc(a, x).lc);
      CHECK(oracle::lc_brute(lines, x, ~std::uint64_t{0}));
      ++inside;
    }
    // Points of Delta(3, n) from a few random vertices, often outside BP.
    auto dv = enumerate_vertices(hypersimplex(3, a.names())).vertices;
    for (int k = 0; k < 40; ++k) {
      std::vector<Point> pick;
      for (int j = 0; j < 2; ++j) pick.push_back(dv[rng() % dv.size()]);
      Point x = oracle::random_hull_point(rng, pick);
      if (bp.contains(x)) continue;
      CHECK_FALSE(is_lc(a, x).lc);
      CHECK_FALSE(oracle::lc_brute(lines, x, ~std::uint64_t{0}));
      ++outside;
    }
  }
  CHECK(inside >= 100);
  CHECK(outside >= 20);
}

TEST_CASE("property: shrinking weights shrinks the b-cut") {
  std::mt19937 rng(31);
  HPolytope d = hypersimplex(3, 7);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Rational> big(7), small(7);
    for (std::size_t i = 0; i < 7; ++i) {
      big[i] = oracle::frac(1 + static_cast<long>(rng() % 6), 6);
      small[i] = big[i] * oracle::frac(1 + static_cast<long>(rng() % 4), 4);
    }
    HPolytope p = b_cut(d, Weight(small));
    HPolytope q = b_cut(d, Weight(big));
    if (!lp_feasible(p)) continue;
    CHECK(subset_of(p, q));
  }
}
