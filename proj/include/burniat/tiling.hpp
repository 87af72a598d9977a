#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "burniat/burniat.hpp"
#include "burniat/polytope.hpp"

namespace burniat {

/// One matroid polytope of a tiling: Delta(3,9) cut by `constraints`.
struct Piece {
  std::string name;
  std::vector<Constraint> constraints;
};

/// A candidate tiling of a Burniat ambient. `partial` marks rows listing only
/// some of their pieces; such rows are never reported valid.
struct TilingSpec {
  std::string name;
  BurniatAmbient ambient;
  std::vector<Piece> pieces;
  bool partial = false;
  std::string source;

  HPolytope ambient_polytope() const;
  HPolytope piece_polytope(std::size_t i) const;
  std::vector<HPolytope> piece_polytopes() const;
};

/// Text format, one tiling per header:
///   tiling <name> ambient=<bur6|bur5|bur4-nodal|bur4-nonnodal|bur3> [partial] [source=<label>]
///   piece <name>: a0 a2 b2 <= 1, b2 b3 c2 <= 1
///   row: a0 a2 b2 <= 1, b2 b3 c2 <= 1; a1 c0 c2 <= 1
/// In a row, ';' separates pieces (named M1, M2, ...) and ',' separates the
/// inequalities of one piece. '#' starts a comment.
std::vector<TilingSpec> parse_tilings(std::string_view text);
std::vector<TilingSpec> load_table(const std::string& path);
std::string write_tilings(const std::vector<TilingSpec>& tilings);

struct DroppedPiece {
  std::string name;
  /// Optimal least slack of the target's strict inequalities over the piece;
  /// nonpositive, so the piece misses the target's relative interior.
  Rational max_slack;
  bool empty = false;  // piece does not meet the target at all
  std::string certificate() const;
};

struct Restriction {
  TilingSpec tiling;
  std::vector<DroppedPiece> dropped;
};

/// Re-targets a tiling to a smaller Burniat ambient, dropping the pieces whose
/// relative interior misses the target's. Throws InputError unless the target
/// has degree one less, or the same degree.
Restriction restrict_tiling(const TilingSpec& t, const BurniatAmbient& target);

}  // namespace burniat
