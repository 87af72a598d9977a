#include "burniat/cover.hpp"

#include <fstream>
#include <sstream>

#include "burniat/errors.hpp"

namespace burniat {

namespace {

DivClass point_sum(std::size_t k, long long d, std::initializer_list<std::pair<std::size_t, long long>> m) {
  DivClass c{d, std::vector<long long>(k, 0)};
  for (auto [i, v] : m) c.m[i] = v;
  return c;
}

}  // namespace

DivClass CoverData::branch_divisor(int which) const {
  DivClass sum{0, std::vector<long long>(k, 0)};
  for (const auto& b : branch.at(which)) sum = sum + b.cls;
  return sum;
}

QDivClass hurwitz_divisor(const std::vector<std::pair<DivClass, int>>& parts) {
  if (parts.empty()) throw InputError("Hurwitz divisor needs at least one component");
  QDivClass out(0, std::vector<Rational>(parts.front().first.k(), 0));
  for (const auto& [cls, m] : parts) {
    if (m <= 0) throw InputError("ramification index must be positive");
    out = out + Rational(m - 1, m) * QDivClass(cls);
  }
  return out;
}

QDivClass hurwitz_divisor(const CoverData& c) {
  std::vector<std::pair<DivClass, int>> parts;
  for (const auto& list : c.branch) {
    for (const auto& b : list) parts.emplace_back(b.cls, b.index);
  }
  if (parts.empty()) return QDivClass(0, std::vector<Rational>(c.k, 0));
  return hurwitz_divisor(parts);
}

Rational cover_k_squared(const CoverData& c, int cover_degree) {
  QDivClass kd = QDivClass(canonical_class(c.k)) + hurwitz_divisor(c);
  return Rational(cover_degree) * intersect_classes(kd, kd);
}

FundamentalRelations check_fundamental_relations(const CoverData& c) {
  static const char* letters = "abc";
  FundamentalRelations r;
  const DivClass d[3] = {c.branch_divisor(0), c.branch_divisor(1), c.branch_divisor(2)};
  for (int i = 0; i < 3; ++i) {
    const int p = (i + 1) % 3, q = (i + 2) % 3;
    DivClass sum = d[p] + d[q];
    auto odd = [&](long long v, const std::string& where) {
      if (v % 2 == 0) return false;
      r.obstruction = std::string("2L_chi") + std::to_string(i + 1) + " = D_" + letters[std::min(p, q)] + " + D_" +
                      letters[std::max(p, q)] + " has odd " + where + " coefficient";
      return true;
    };
    if (odd(sum.d, "H")) return r;
    for (std::size_t j = 0; j < sum.m.size(); ++j) {
      const std::string name = j < c.points.size() ? c.points[j] : std::to_string(j + 1);
      if (odd(sum.m[j], "E_" + name)) return r;
    }
    DivClass half{sum.d / 2, sum.m};
    for (auto& v : half.m) v /= 2;
    r.l[i] = half;
  }
  r.ok = true;
  return r;
}

CoverData burniat_cover(std::string_view config) {
  PointConfiguration pc = burniat_configuration(config);
  CoverData c;
  c.k = pc.k();
  c.points = pc.points;
  const std::size_t k = c.k;
  enum { A, B, C, P1, P2, P3 };
  const std::size_t pa = A, pb = B, pc_ = C;
  // A0 = line P_B P_C, A3 = E over P_A, and cyclically.
  c.branch[0] = {{"A0", point_sum(k, 1, {{pb, 1}, {pc_, 1}})}, {"A3", exceptional_class(k, pa)}};
  c.branch[1] = {{"B0", point_sum(k, 1, {{pc_, 1}, {pa, 1}})}, {"B3", exceptional_class(k, pb)}};
  c.branch[2] = {{"C0", point_sum(k, 1, {{pa, 1}, {pb, 1}})}, {"C3", exceptional_class(k, pc_)}};
  // A_i passes through P_B, B_i through P_C, C_i through P_A; the extra
  // points each of them meets come from the configuration.
  std::vector<std::size_t> on[3][2];
  if (config == "d5") {
    for (int l = 0; l < 3; ++l) on[l][0] = {P1};
  } else if (config == "d4-nodal") {
    on[0][0] = {P1, P2};
    on[1][0] = {P1};
    on[1][1] = {P2};
    on[2][0] = {P1};
    on[2][1] = {P2};
  } else if (config == "d4-nonnodal") {
    for (int l = 0; l < 3; ++l) {
      on[l][0] = {P1};
      on[l][1] = {P2};
    }
  } else if (config == "d3") {
    on[0][0] = {P1, P2};
    on[0][1] = {P3};
    on[1][0] = {P1, P3};
    on[1][1] = {P2};
    on[2][0] = {P2, P3};
    on[2][1] = {P1};
  }
  const std::size_t through[3] = {pb, pc_, pa};
  static const char* names = "ABC";
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 2; ++i) {
      DivClass cls = point_sum(k, 1, {{through[l], 1}});
      for (auto p : on[l][i]) cls.m[p] = 1;
      auto& list = c.branch[l];
      list.insert(list.begin() + 1 + i, BranchCurve{std::string(1, names[l]) + std::to_string(i + 1), cls});
    }
  }
  return c;
}

CoverData burniat_cover(int k) {
  switch (k) {
    case 3: return burniat_cover("d6");
    case 4: return burniat_cover("d5");
    case 5: return burniat_cover("d4-nodal");
    case 6: return burniat_cover("d3");
    default: throw InputError("Burniat data exists for k = 3, 4, 5, 6");
  }
}

CoverData parse_cover(std::string_view text) {
  CoverData c;
  bool have_points = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    if (head == "points") {
      if (have_points) throw InputError("duplicate 'points' row", line_no, 1);
      for (std::string w; words >> w;) c.points.push_back(w);
      c.k = c.points.size();
      have_points = true;
    } else if (head == "branch") {
      if (!have_points) throw InputError("'points' must come before 'branch'", line_no, 1);
      std::string which, name, eq;
      words >> which >> name >> eq;
      int slot = which == "a" ? 0 : which == "b" ? 1 : which == "c" ? 2 : -1;
      if (slot < 0) throw InputError("branch letter must be a, b or c", line_no, static_cast<int>(line.find(which)) + 1);
      if (name.empty() || eq != "=") throw InputError("expected 'branch <a|b|c> <name> = d; m...'", line_no, 1);
      std::string rest;
      std::getline(words, rest);
      int index = 2;
      if (auto pos = rest.find("index="); pos != std::string::npos) {
        try {
          index = std::stoi(rest.substr(pos + 6));
        } catch (const std::exception&) {
          throw InputError("bad ramification index", line_no, static_cast<int>(line.find("index=")) + 1);
        }
        if (index <= 0) throw InputError("ramification index must be positive", line_no, static_cast<int>(line.find("index=")) + 1);
        rest.erase(pos);
      }
      DivClass cls;
      try {
        cls = parse_class(rest);
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no, static_cast<int>(line.find('=')) + 2);
      }
      if (cls.k() != c.k) throw InputError("class has " + std::to_string(cls.k()) + " multiplicities, expected " + std::to_string(c.k), line_no, static_cast<int>(line.find('=')) + 2);
      c.branch[slot].push_back(BranchCurve{name, cls, index});
    } else {
      throw InputError("unknown row '" + head + "'", line_no, static_cast<int>(line.find(head)) + 1);
    }
  }
  if (!have_points) throw InputError("missing 'points' row");
  return c;
}

CoverData read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cover(ss.str());
}

}  // namespace burniat
