#include "burniat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "burniat/errors.hpp"

namespace burniat {

namespace {

void same_k(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("classes live on different blowups (k = " + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

// Enumerates m in Z^k with sum m = s and sum m^2 = q.
void search(std::size_t k, long long s, long long q, long long bound, std::vector<long long>& m,
            const std::function<void(const std::vector<long long>&)>& emit) {
  const std::size_t rest = k - m.size();
  if (rest == 0) {
    if (s == 0 && q == 0) emit(m);
    return;
  }
  // Cauchy-Schwarz: s^2 <= rest * q.
  if (q < 0 || s * s > static_cast<long long>(rest) * q) return;
  for (long long v = -bound; v <= bound; ++v) {
    if (v * v > q) continue;
    m.push_back(v);
    search(k, s - v, q - v * v, bound, m, emit);
    m.pop_back();
  }
}

}  // namespace

QDivClass::QDivClass(const DivClass& c) : d(static_cast<long>(c.d)) {
  for (auto x : c.m) m.emplace_back(static_cast<long>(x));
}

DivClass operator+(const DivClass& x, const DivClass& y) {
  same_k(x.k(), y.k());
  DivClass r{x.d + y.d, x.m};
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] += y.m[i];
  return r;
}

DivClass operator-(const DivClass& x, const DivClass& y) { return x + (-1) * y; }

DivClass operator*(long long s, const DivClass& x) {
  DivClass r{s * x.d, x.m};
  for (auto& v : r.m) v *= s;
  return r;
}

QDivClass operator+(const QDivClass& x, const QDivClass& y) {
  same_k(x.k(), y.k());
  QDivClass r = x;
  r.d += y.d;
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] += y.m[i];
  return r;
}

QDivClass operator*(const Rational& s, const QDivClass& x) {
  QDivClass r = x;
  r.d *= s;
  for (auto& v : r.m) v *= s;
  return r;
}

long long intersect_classes(const DivClass& x, const DivClass& y) {
  same_k(x.k(), y.k());
  long long r = x.d * y.d;
  for (std::size_t i = 0; i < x.m.size(); ++i) r -= x.m[i] * y.m[i];
  return r;
}

Rational intersect_classes(const QDivClass& x, const QDivClass& y) {
  same_k(x.k(), y.k());
  Rational r = x.d * y.d;
  for (std::size_t i = 0; i < x.m.size(); ++i) r -= x.m[i] * y.m[i];
  return r;
}

DivClass hyperplane_class(std::size_t k) { return DivClass{1, std::vector<long long>(k, 0)}; }

DivClass exceptional_class(std::size_t k, std::size_t i) {
  if (i >= k) throw InputError("exceptional index out of range");
  DivClass e{0, std::vector<long long>(k, 0)};
  e.m[i] = -1;
  return e;
}

DivClass canonical_class(std::size_t k) { return DivClass{-3, std::vector<long long>(k, -1)}; }

std::string to_string(const DivClass& c) {
  std::string out = "(" + std::to_string(c.d) + ";";
  for (std::size_t i = 0; i < c.m.size(); ++i) out += (i ? "," : "") + std::to_string(c.m[i]);
  return out + ")";
}

std::string to_string(const QDivClass& c) {
  std::string out = "(" + to_string(c.d) + ";";
  for (std::size_t i = 0; i < c.m.size(); ++i) out += (i ? "," : "") + to_string(c.m[i]);
  return out + ")";
}

DivClass parse_class(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
  }
  auto semi = s.find(';');
  if (semi == std::string::npos) throw InputError("class needs 'd; m1 ... mk'");
  std::istringstream head(s.substr(0, semi)), tail(s.substr(semi + 1));
  DivClass c;
  std::string extra;
  if (!(head >> c.d) || (head >> extra)) throw InputError("bad degree in class '" + std::string(text) + "'");
  std::string word;
  while (tail >> word) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(word, &used);
      if (used != word.size()) throw std::invalid_argument(word);
      c.m.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad multiplicity '" + word + "'");
    }
  }
  return c;
}

std::vector<DivClass> enumerate_neg_curves(std::size_t k, int self_int, int max_degree) {
  if (k > 8) throw InputError("negative-curve enumeration needs k <= 8");
  if (self_int != -1 && self_int != -2) throw InputError("self-intersection must be -1 or -2");
  std::vector<DivClass> out;
  for (long long d = 0; d <= max_degree; ++d) {
    // C.K = -3d + sum m, C^2 = d^2 - sum m^2.
    const long long s = 3 * d + (self_int == -1 ? -1 : 0);
    const long long q = d * d - self_int;
    const long long bound = static_cast<long long>(std::sqrt(static_cast<double>(q))) + 1;
    std::vector<long long> m;
    search(k, s, q, bound, m, [&](const std::vector<long long>& v) { out.push_back(DivClass{d, v}); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivClass> PointConfiguration::incidence_curves() const {
  std::vector<DivClass> out;
  auto curve = [&](long long degree, const std::vector<std::size_t>& through) {
    DivClass c{degree, std::vector<long long>(k(), 0)};
    for (auto i : through) {
      if (i >= k()) throw InputError("incidence refers to a missing point");
      c.m[i] = 1;
    }
    out.push_back(c);
  };
  for (const auto& l : lines) curve(1, l);
  for (const auto& c : conics) curve(2, c);
  return out;
}

std::vector<DivClass> PointConfiguration::minus_two_curves() const {
  std::vector<DivClass> out;
  const DivClass kc = canonical_class(k());
  for (const auto& c : incidence_curves()) {
    if (intersect_classes(c, c) == -2 && intersect_classes(c, kc) == 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivClass> PointConfiguration::effective_roots() const {
  const auto simple = minus_two_curves();
  std::set<DivClass> roots(simple.begin(), simple.end());
  std::vector<DivClass> frontier(simple.begin(), simple.end());
  // r + s is again a root exactly when r.s = 1.
  while (!frontier.empty()) {
    std::vector<DivClass> next;
    for (const auto& r : frontier) {
      for (const auto& s : simple) {
        if (intersect_classes(r, s) != 1) continue;
        DivClass t = r + s;
        if (roots.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

std::vector<DivClass> PointConfiguration::minus_one_curves() const {
  const auto curves = minus_two_curves();
  std::vector<DivClass> out;
  for (const auto& e : enumerate_neg_curves(k(), -1)) {
    bool irreducible = true;
    for (const auto& r : curves) irreducible = irreducible && intersect_classes(e, r) >= 0;
    if (irreducible) out.push_back(e);
  }
  return out;
}

PointConfiguration burniat_configuration(std::string_view name) {
  PointConfiguration c;
  c.points = {"A", "B", "C"};
  enum { A, B, C, P1, P2, P3 };
  if (name == "d6") return c;
  if (name == "d5") {
    c.points.push_back("P");
    return c;
  }
  if (name == "d4-nodal" || name == "d4-nonnodal") {
    c.points.insert(c.points.end(), {"P1", "P2"});
    if (name == "d4-nodal") c.lines = {{B, P1, P2}};
    return c;
  }
  if (name == "d3") {
    c.points.insert(c.points.end(), {"P1", "P2", "P3"});
    c.lines = {{B, P1, P2}, {C, P1, P3}, {A, P2, P3}};
    return c;
  }
  throw InputError("unknown Burniat configuration '" + std::string(name) + "' (expected d6, d5, d4-nodal, d4-nonnodal, d3)");
}

NefReport nef_ample_report(const PointConfiguration& config, const QDivClass& d) {
  const std::size_t k = config.k();
  if (d.k() != k) throw InputError("divisor does not live on this blowup");
  std::vector<DivClass> tests = config.minus_one_curves();
  for (const auto& c : config.incidence_curves()) tests.push_back(c);
  for (std::size_t i = 0; i < k; ++i) tests.push_back(hyperplane_class(k) + exceptional_class(k, i));
  tests.push_back(hyperplane_class(k));
  std::sort(tests.begin(), tests.end());
  tests.erase(std::unique(tests.begin(), tests.end()), tests.end());

  NefReport r;
  r.self_intersection = intersect_classes(d, d);
  for (const auto& c : tests) {
    Rational v = intersect_classes(d, QDivClass(c));
    if (sgn(v) < 0) {
      r.verdict = Positivity::NotNef;
      r.negative_class = c;
      r.zero_classes.clear();
      return r;
    }
    if (sgn(v) == 0) r.zero_classes.push_back(c);
  }
  r.verdict = (r.zero_classes.empty() && sgn(r.self_intersection) > 0) ? Positivity::Ample : Positivity::NefNotAmple;
  return r;
}

std::string format_nef_report(const NefReport& r) {
  switch (r.verdict) {
    case Positivity::Ample:
      return "AMPLE";
    case Positivity::NotNef:
      return "NOT-NEF negative=" + to_string(*r.negative_class);
    case Positivity::NefNotAmple: {
      std::string out = "NEF-NOT-AMPLE";
      if (r.zero_classes.empty()) out += " square=" + to_string(r.self_intersection);
      for (const auto& c : r.zero_classes) out += " zero=" + to_string(c);
      return out;
    }
  }
  return "";
}

}  // namespace burniat
