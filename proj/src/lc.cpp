#include "burniat/lc.hpp"

#include <bit>

#include "burniat/errors.hpp"
#include "burniat/hypersimplex.hpp"
#include "burniat/lp.hpp"

namespace burniat {

namespace {

LcVerdict check_subsets(const ArrangementSpec& a, const std::vector<Rational>& x, std::uint64_t universe) {
  if (x.size() != a.n()) throw InputError("weight vector length does not match hyperplane count");
  LcVerdict out;
  // Enumerate subsets of `universe`; the closure of a violating subset is
  // reported so the certificate names a whole flat.
  for (std::uint64_t s = universe;; s = (s - 1) & universe) {
    if (s != 0) {
      const std::size_t rk = a.rank(s);
      if (rk < a.r() && s == a.closure(s)) {
        Rational sum = 0;
        for (auto i : to_indices(s)) sum += x[i];
        if (sum > rk && (out.lc || std::popcount(s) < std::popcount(out.flat) ||
                         (std::popcount(s) == std::popcount(out.flat) && s < out.flat))) {
          out = LcVerdict{false, s, sum, rk};
        }
      }
    }
    if (s == 0) break;
  }
  return out;
}

}  // namespace

LcVerdict is_lc(const ArrangementSpec& a, const std::vector<Rational>& x) {
  const std::uint64_t full = (std::uint64_t{1} << a.n()) - 1;
  return check_subsets(a, x, full);
}

LcVerdict is_lc_at_point(const ArrangementSpec& a, const std::vector<Rational>& x, const IndexSet& incident) {
  return check_subsets(a, x, to_mask(incident));
}

bool is_stable(const ArrangementSpec& a) {
  return is_lc(a, a.weight().values()).lc && a.weight().total() > static_cast<long>(a.r());
}

bool lc_at_point_via_polytope(const ArrangementSpec& a, const HPolytope& bp, const IndexSet& incident) {
  if (!(a.weight().total() > static_cast<long>(a.r()))) throw HypothesisError("arrangement is not of general type");
  HPolytope delta_b = b_cut(hypersimplex(static_cast<int>(a.r()), a.names()), a.weight());
  if (!lp_feasible(intersect(bp, delta_b))) throw HypothesisError("BP does not meet the b-cut hypersimplex");
  return lp_feasible(intersect(bp, face_at_point(delta_b, incident, a.weight()))).has_value();
}

std::string format_verdict(const ArrangementSpec& a, const LcVerdict& v) {
  if (v.lc) return "LC";
  return "NOT-LC I=" + a.format_set(v.flat) + " sum=" + to_string(v.sum) + " codim=" + std::to_string(v.codim);
}

}  // namespace burniat
