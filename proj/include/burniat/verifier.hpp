#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burniat/polytope.hpp"
#include "burniat/tiling.hpp"

namespace burniat {

struct Relevance {
  bool relevant = false;
  Point witness;           // in piece and relint(ambient) when relevant
  Rational max_slack;      // certificate when irrelevant: optimum <= 0
  bool empty = false;      // piece misses the ambient entirely
};

/// Pieces meet relint(ambient)? Each piece is tested independently.
std::vector<Relevance> check_piece_relevance(const HPolytope& ambient, const std::vector<HPolytope>& pieces);
std::vector<Relevance> check_piece_relevance(const TilingSpec& t);

enum class Verdict { Valid, Gap, Overlap, Partial };

struct PieceRow {
  std::string name;
  Rational volume;  // normalized volume of piece ∩ ambient
  bool relevant = false;
};

struct OverlapRow {
  std::size_t i = 0, j = 0;
  Rational volume;  // normalized volume of piece_i ∩ piece_j ∩ ambient
};

struct SubsetRow {
  std::vector<std::size_t> members;
  Verdict verdict = Verdict::Valid;
  Rational total;
  Point witness;
};

struct TilingReport {
  std::string name;
  std::string ambient_name;
  std::vector<PieceRow> pieces;
  std::vector<OverlapRow> overlaps;
  Rational total;
  Rational ambient_volume;
  Verdict verdict = Verdict::Valid;
  Point witness;                 // gap point, or overlap point for (i, j)
  std::size_t overlap_i = 0, overlap_j = 0;
  /// Maximal families of pairwise non-overlapping pieces, each with its own
  /// cover verdict. Filled only when the full family is not valid.
  std::vector<SubsetRow> subsets;
};

/// Point of relint(ambient) outside every piece, or nullopt when the pieces
/// cover the ambient.
std::optional<Point> find_gap(const HPolytope& ambient, const std::vector<HPolytope>& pieces);

/// Cover and disjointness via exact volumes, backed by witness points.
/// Throws UnboundedError when some piece ∩ ambient is unbounded.
TilingReport check_cover_and_disjoint(const HPolytope& ambient, const std::vector<HPolytope>& pieces,
                                      const std::vector<std::string>& names);
TilingReport check_cover_and_disjoint(const TilingSpec& t);

/// nullopt when P ⊆ Q; otherwise a point of P violating some constraint of Q.
std::optional<Point> check_containment(const HPolytope& p, const HPolytope& q);

std::string verdict_name(Verdict v);
std::string format_report(const TilingReport& r);
std::string report_json(const TilingReport& r);

/// Worker count for independent per-piece work: BURNIAT_THREADS if set,
/// otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace burniat
