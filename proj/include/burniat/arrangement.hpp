#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

/// Per-hyperplane weights b_i with 0 < b_i <= 1.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> b);

  const std::vector<Rational>& values() const { return b_; }
  std::size_t size() const { return b_.size(); }
  const Rational& operator[](std::size_t i) const { return b_[i]; }
  Rational total() const;

  static Weight uniform(std::size_t n, const Rational& value);

 private:
  std::vector<Rational> b_;
};

using IndexSet = std::vector<std::size_t>;

/// n labeled hyperplanes in P^{r-1} with a weight vector. Hyperplanes are
/// given either by rational linear forms in r homogeneous coordinates, or
/// (for r = 3) purely combinatorially by the list of points where three or
/// more lines meet.
class ArrangementSpec {
 public:
  /// Realized arrangement from explicit forms.
  ArrangementSpec(std::vector<std::string> names, std::vector<std::vector<Rational>> forms, Weight weight);
  /// Combinatorial line arrangement in P^2: `points` lists the index sets of
  /// concurrent triples (or larger); all other pairs meet in simple points.
  ArrangementSpec(std::vector<std::string> names, std::vector<IndexSet> points, Weight weight);

  std::size_t r() const { return r_; }
  std::size_t n() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Weight& weight() const { return weight_; }
  bool combinatorial() const { return forms_.empty(); }
  const std::vector<std::vector<Rational>>& forms() const { return forms_; }

  std::size_t index_of(std::string_view name) const;

  /// Rank of the stacked forms indexed by the subset (codimension of the
  /// intersection when it is nonempty, i.e. when the rank is < r).
  std::size_t rank(std::uint64_t subset) const;
  std::uint64_t closure(std::uint64_t subset) const;

  /// Closed flats of rank r-1 (points of P^{r-1}) lying on at least two
  /// hyperplanes, each as the set of hyperplanes through it.
  std::vector<IndexSet> multiple_points() const;

  /// Closed flats F with 1 <= rank(F) < r and rank(F) < |F|.
  std::vector<std::uint64_t> dependent_flats() const;

  std::string format_set(std::uint64_t subset) const;

 private:
  std::size_t compute_rank(std::uint64_t subset) const;

  std::size_t r_;
  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> forms_;
  std::vector<std::uint64_t> points_;  // combinatorial mode only
  Weight weight_;
  mutable std::unordered_map<std::uint64_t, std::size_t> rank_cache_;
};

std::uint64_t to_mask(const IndexSet& s);
IndexSet to_indices(std::uint64_t mask);

/// Text format, one row per line:
///   line <name> <c0> <c1> <c2>      (homogeneous coefficients)
///   line <name>                     (combinatorial mode)
///   weight <name> <p/q>             (default weight 1)
///   concurrent <name> <name> <name> ...   (combinatorial mode)
/// A file uses either coefficient rows or concurrency rows, not both.
ArrangementSpec parse_arrangement(std::string_view text);
ArrangementSpec read_arrangement_file(const std::string& path);

}  // namespace burniat
