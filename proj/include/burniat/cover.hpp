#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/lattice.hpp"

namespace burniat {

/// One irreducible branch component with its ramification index.
struct BranchCurve {
  std::string name;
  DivClass cls;
  int index = 2;
};

/// Z2^2 building data on Bl_k P^2: the branch divisors D_a, D_b, D_c as
/// lists of irreducible components.
struct CoverData {
  std::size_t k = 0;
  std::vector<std::string> points;
  std::array<std::vector<BranchCurve>, 3> branch;  // a, b, c

  DivClass branch_divisor(int which) const;  // D_a, D_b, D_c
};

/// sum (m_i - 1)/m_i D_i. Throws InputError for m_i <= 0.
QDivClass hurwitz_divisor(const std::vector<std::pair<DivClass, int>>& parts);
QDivClass hurwitz_divisor(const CoverData& c);

/// cover_degree * (K + D_Hur)^2.
Rational cover_k_squared(const CoverData& c, int cover_degree = 4);

struct FundamentalRelations {
  bool ok = false;
  std::array<DivClass, 3> l;  // L_chi1 = (D_b + D_c)/2, L_chi2, L_chi3
  std::string obstruction;
};

/// Halves D_b + D_c, D_a + D_c, D_a + D_b in the integer lattice.
FundamentalRelations check_fundamental_relations(const CoverData& c);

/// Burniat building data on the configurations of burniat_configuration.
CoverData burniat_cover(std::string_view config);
/// Default configuration for k = 3, 4, 5, 6 (d6, d5, d4-nodal, d3).
CoverData burniat_cover(int k);

/// Text format:
///   points A B C P
///   branch a A1 = 1; 0 1 0 1      (optional trailing "index=<m>")
CoverData parse_cover(std::string_view text);
CoverData read_cover_file(const std::string& path);

}  // namespace burniat
