#include "burniat/volume.hpp"

#include <boost/dynamic_bitset.hpp>
#include <algorithm>
#include <map>

#include "burniat/linalg.hpp"

namespace burniat {

namespace {

using Bits = boost::dynamic_bitset<>;

class Puller {
 public:
  Puller(const VertexSet& vs, TriangulationOrder order) : vs_(vs), order_(order) {
    const std::size_t nv = vs.size();
    const std::size_t ni = nv ? vs.incidence[0].size() : 0;
    tight_.assign(ni, Bits(nv));
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t i = 0; i < ni; ++i) {
        if (vs.incidence[v][i]) tight_[i].set(v);
      }
    }
  }

  const std::vector<Simplex>& triangulate(const Bits& face, int dim) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<Simplex> out;
    if (static_cast<int>(face.count()) == dim + 1) {
      Simplex s;
      for (auto v = face.find_first(); v != Bits::npos; v = face.find_next(v)) s.push_back(v);
      out.push_back(std::move(s));
    } else {
      std::size_t apex = pick(face);
      for (const auto& facet : facets(face)) {
        if (facet.test(apex)) continue;
        for (const auto& s : triangulate(facet, dim - 1)) {
          Simplex t = s;
          t.push_back(apex);
          out.push_back(std::move(t));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  std::size_t pick(const Bits& face) const {
    if (order_ == TriangulationOrder::Lexicographic) return face.find_first();
    std::size_t last = face.find_first();
    for (auto v = face.find_next(last); v != Bits::npos; v = face.find_next(v)) last = v;
    return last;
  }

  // Inclusion-maximal proper nonempty faces of `face` cut by one inequality.
  std::vector<Bits> facets(const Bits& face) const {
    std::vector<Bits> cand;
    for (const auto& t : tight_) {
      Bits f = face & t;
      if (f.none() || f == face) continue;
      cand.push_back(std::move(f));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Bits> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < cand.size() && maximal; ++j) {
        if (i != j && cand[i].is_proper_subset_of(cand[j])) maximal = false;
      }
      if (maximal) out.push_back(cand[i]);
    }
    return out;
  }

  const VertexSet& vs_;
  TriangulationOrder order_;
  std::vector<Bits> tight_;
  std::map<Bits, std::vector<Simplex>> memo_;
};

}  // namespace

std::vector<Simplex> pulling_triangulation(const VertexSet& vs, int dim, TriangulationOrder order) {
  if (vs.empty() || dim < 0) return {};
  Puller puller(vs, order);
  Bits all(vs.size());
  all.set();
  return puller.triangulate(all, dim);
}

Rational normalized_volume(const HPolytope& p, TriangulationOrder order) {
  return normalized_volume(p, enumerate_vertices(p), order);
}

Rational normalized_volume(const HPolytope& p, const VertexSet& vs, TriangulationOrder order) {
  if (vs.empty()) return 0;
  auto chart = affine_chart(p.equalities(), p.ambient_dim());
  const std::size_t k = chart->dim();
  if (k == 0) return vs.size() == 1 ? 1 : 0;

  Matrix edges;
  for (std::size_t v = 1; v < vs.size(); ++v) {
    std::vector<Rational> e(p.ambient_dim());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = vs.vertices[v][i] - vs.vertices[0][i];
    edges.push_back(std::move(e));
  }
  if (rank(edges) < k) return 0;

  // Coordinates on which the lattice basis projects injectively.
  Matrix basis_t(p.ambient_dim(), std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < p.ambient_dim(); ++i) basis_t[i][j] = chart->basis[j][i];
  }
  auto coords = independent_rows(basis_t);
  Matrix basis_minor;
  for (auto i : coords) basis_minor.push_back(basis_t[i]);
  Rational lattice_det = abs(determinant(basis_minor));

  Rational total = 0;
  for (const auto& s : pulling_triangulation(vs, static_cast<int>(k), order)) {
    Matrix m(k, std::vector<Rational>(k));
    const Point& base = vs.vertices[s[0]];
    for (std::size_t r = 1; r <= k; ++r) {
      for (std::size_t c = 0; c < k; ++c) m[r - 1][c] = vs.vertices[s[r]][coords[c]] - base[coords[c]];
    }
    total += abs(determinant(std::move(m)));
  }
  return total / lattice_det;
}

}  // namespace burniat
