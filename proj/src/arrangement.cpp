#include "burniat/arrangement.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <tuple>

#include "burniat/errors.hpp"
#include "burniat/linalg.hpp"

namespace burniat {

Weight::Weight(std::vector<Rational> b) : b_(std::move(b)) {
  for (const auto& v : b_) {
    if (sgn(v) <= 0 || v > 1) throw InputError("weight " + to_string(v) + " outside (0, 1]");
  }
}

Rational Weight::total() const {
  Rational s = 0;
  for (const auto& v : b_) s += v;
  return s;
}

Weight Weight::uniform(std::size_t n, const Rational& value) { return Weight(std::vector<Rational>(n, value)); }

std::uint64_t to_mask(const IndexSet& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

IndexSet to_indices(std::uint64_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

ArrangementSpec::ArrangementSpec(std::vector<std::string> names, std::vector<std::vector<Rational>> forms, Weight weight)
    : r_(forms.empty() ? 0 : forms[0].size()), names_(std::move(names)), forms_(std::move(forms)), weight_(std::move(weight)) {
  if (forms_.size() != names_.size()) throw InputError("one form per hyperplane required");
  if (names_.size() > 63) throw InputError("at most 63 hyperplanes supported");
  if (weight_.size() != names_.size()) throw InputError("weight length does not match hyperplane count");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].size() != r_) throw InputError("form '" + names_[i] + "' has the wrong number of coefficients");
    bool zero = true;
    for (const auto& c : forms_[i]) zero = zero && sgn(c) == 0;
    if (zero) throw InputError("form '" + names_[i] + "' is zero");
  }
  if (names_.size() < r_) throw InputError("need at least r hyperplanes");
}

ArrangementSpec::ArrangementSpec(std::vector<std::string> names, std::vector<IndexSet> points, Weight weight)
    : r_(3), names_(std::move(names)), weight_(std::move(weight)) {
  if (names_.size() > 63) throw InputError("at most 63 hyperplanes supported");
  if (weight_.size() != names_.size()) throw InputError("weight length does not match hyperplane count");
  if (names_.size() < r_) throw InputError("need at least r hyperplanes");
  for (const auto& p : points) {
    if (p.size() < 3) throw InputError("a concurrency point needs at least three lines");
    for (auto i : p) {
      if (i >= names_.size()) throw InputError("concurrency refers to an unknown line");
    }
    std::uint64_t m = to_mask(p);
    for (auto q : points_) {
      if (std::popcount(m & q) >= 2 && m != q) {
        throw InputError("two distinct points share two lines: " + format_set(m) + " and " + format_set(q));
      }
    }
    points_.push_back(m);
  }
}

std::size_t ArrangementSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown hyperplane '" + std::string(name) + "'");
}

std::size_t ArrangementSpec::rank(std::uint64_t subset) const {
  auto it = rank_cache_.find(subset);
  if (it != rank_cache_.end()) return it->second;
  std::size_t r = compute_rank(subset);
  rank_cache_.emplace(subset, r);
  return r;
}

std::size_t ArrangementSpec::compute_rank(std::uint64_t subset) const {
  const int count = std::popcount(subset);
  if (count == 0) return 0;
  if (combinatorial()) {
    if (count == 1) return 1;
    if (count == 2) return 2;
    for (auto p : points_) {
      if ((subset & ~p) == 0) return 2;
    }
    return 3;
  }
  Matrix m;
  for (auto i : to_indices(subset)) m.push_back(forms_[i]);
  return burniat::rank(std::move(m));
}

std::uint64_t ArrangementSpec::closure(std::uint64_t subset) const {
  const std::size_t r = rank(subset);
  std::uint64_t out = subset;
  for (std::size_t j = 0; j < n(); ++j) {
    std::uint64_t bit = std::uint64_t{1} << j;
    if (!(subset & bit) && rank(subset | bit) == r) out |= bit;
  }
  return out;
}

std::vector<IndexSet> ArrangementSpec::multiple_points() const {
  std::vector<std::uint64_t> seen;
  std::vector<IndexSet> out;
  // Every point flat of rank r-1 contains r-1 independent hyperplanes; grow
  // from independent sets to avoid scanning all 2^n subsets when r = 3.
  const std::size_t target = r_ - 1;
  std::vector<std::uint64_t> frontier{0};
  for (std::size_t level = 0; level < target; ++level) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      for (std::size_t j = 0; j < n(); ++j) {
        std::uint64_t bit = std::uint64_t{1} << j;
        if ((s & bit) || (s >> j) != 0) continue;  // grow in increasing index order
        if (rank(s | bit) == level + 1) next.push_back(s | bit);
      }
    }
    frontier = std::move(next);
  }
  for (auto s : frontier) {
    std::uint64_t f = closure(s);
    if (std::popcount(f) < 2) continue;
    if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
    seen.push_back(f);
  }
  std::sort(seen.begin(), seen.end());
  for (auto f : seen) out.push_back(to_indices(f));
  return out;
}

std::vector<std::uint64_t> ArrangementSpec::dependent_flats() const {
  std::vector<std::uint64_t> out;
  const std::uint64_t full = n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n()) - 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::size_t rk = rank(s);
    if (rk >= r_ || rk >= static_cast<std::size_t>(std::popcount(s))) continue;
    if (closure(s) != s) continue;
    out.push_back(s);
  }
  return out;
}

std::string ArrangementSpec::format_set(std::uint64_t subset) const {
  std::string out = "{";
  bool first = true;
  for (auto i : to_indices(subset)) {
    if (!first) out += ',';
    out += names_[i];
    first = false;
  }
  return out + "}";
}

ArrangementSpec parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> forms;
  std::vector<std::tuple<std::string, Rational, int>> weights;
  std::vector<std::pair<std::vector<std::string>, int>> concurrent;
  bool has_coeffs = false;
  bool bare_lines = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind)) continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    try {
      if (kind == "line") {
        if (rest.empty()) throw InputError("line row needs a name");
        names.push_back(rest[0]);
        std::vector<Rational> form;
        for (std::size_t i = 1; i < rest.size(); ++i) form.push_back(parse_rational(rest[i]));
        (form.empty() ? bare_lines : has_coeffs) = true;
        forms.push_back(std::move(form));
      } else if (kind == "weight") {
        if (rest.size() != 2) throw InputError("weight row is 'weight <name> <p/q>'");
        weights.emplace_back(rest[0], parse_rational(rest[1]), line_no);
      } else if (kind == "concurrent") {
        concurrent.emplace_back(rest, line_no);
      } else {
        throw InputError("unknown row kind '" + kind + "'");
      }
    } catch (const InputError& e) {
      if (e.line() > 0) throw;
      throw InputError(e.what(), line_no, 1);
    }
  }
  if (has_coeffs && (bare_lines || !concurrent.empty())) {
    throw InputError("mixing coefficient lines with combinatorial rows", line_no, 1);
  }
  std::vector<Rational> w(names.size(), 1);
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw InputError("unknown line '" + name + "'");
  };
  for (const auto& [name, value, at] : weights) {
    try {
      w[find(name)] = value;
    } catch (const InputError& e) {
      throw InputError(e.what(), at, 1);
    }
  }
  if (has_coeffs) return ArrangementSpec(names, forms, Weight(w));
  std::vector<IndexSet> points;
  for (const auto& [members, at] : concurrent) {
    IndexSet p;
    try {
      for (const auto& m : members) p.push_back(find(m));
    } catch (const InputError& e) {
      throw InputError(e.what(), at, 1);
    }
    points.push_back(std::move(p));
  }
  return ArrangementSpec(names, points, Weight(w));
}

ArrangementSpec read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

}  // namespace burniat
