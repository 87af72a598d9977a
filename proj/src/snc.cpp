#include "burniat/snc.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "burniat/errors.hpp"

namespace burniat {

namespace {

int column_of(const std::string& line, const std::string& token) {
  auto pos = line.find(token);
  return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
}

LatticeVector parse_coordinates(const std::string& text, const SurfaceLattice& lat) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == '(' || ch == ')' || ch == ',' || ch == ';') ch = ' ';
  }
  std::istringstream in(s);
  LatticeVector v;
  for (std::string w; in >> w;) v.push_back(parse_rational(w));
  if (v.size() != lat.rank()) {
    throw InputError("expected " + std::to_string(lat.rank()) + " coordinates for " + lat.kind + ", got " + std::to_string(v.size()));
  }
  return v;
}

// "1/2 A1 + C0 - 2 E" over the component's classes.
LatticeVector parse_combination(const std::string& text, const Component& comp) {
  LatticeVector out(comp.lattice.rank(), 0);
  std::istringstream in(text);
  std::string w;
  Rational coeff = 1;
  bool have_coeff = false, expect_term = true;
  int sign = 1;
  while (in >> w) {
    if (w == "+" || w == "-") {
      if (expect_term && (have_coeff || sign == -1)) throw InputError("misplaced '" + w + "'");
      sign = w == "-" ? -1 : 1;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw InputError("expected '+' or '-' before '" + w + "'");
    if (std::isdigit(static_cast<unsigned char>(w[0]))) {
      if (have_coeff) throw InputError("two coefficients in a row");
      coeff = parse_rational(w);
      have_coeff = true;
      continue;
    }
    auto it = comp.classes.find(w);
    if (it == comp.classes.end()) throw InputError("unknown class '" + w + "' on component " + comp.name);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += Rational(sign) * coeff * it->second[i];
    coeff = 1;
    have_coeff = false;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw InputError("incomplete divisor expression");
  return out;
}

}  // namespace

SurfaceLattice SurfaceLattice::from_kind(std::string_view kind) {
  SurfaceLattice l;
  l.kind = std::string(kind);
  auto blowup = [&](std::size_t k) {
    l.gram.assign(k + 1, std::vector<long long>(k + 1, 0));
    l.gram[0][0] = 1;
    for (std::size_t i = 1; i <= k; ++i) l.gram[i][i] = -1;
    l.canonical.assign(k + 1, -1);
    l.canonical[0] = -3;
  };
  if (kind == "P2") {
    blowup(0);
  } else if (kind == "F1") {
    blowup(1);
  } else if (kind == "F0") {
    l.gram = {{0, 1}, {1, 0}};
    l.canonical = {-2, -2};
  } else if (kind.starts_with("Bl") && kind.ends_with("P2") && kind.size() > 4) {
    std::string digits(kind.substr(2, kind.size() - 4));
    if (digits.empty() || digits.size() > 1 || !std::isdigit(static_cast<unsigned char>(digits[0]))) {
      throw InputError("unknown surface '" + std::string(kind) + "'");
    }
    blowup(static_cast<std::size_t>(digits[0] - '0'));
  } else {
    throw InputError("unknown surface '" + std::string(kind) + "' (expected P2, F0, F1, Bl<k>P2)");
  }
  return l;
}

Rational SurfaceLattice::pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != rank() || y.size() != rank()) throw InputError("class does not live on " + kind);
  Rational r = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram[i][j] != 0) r += x[i] * Rational(static_cast<long>(gram[i][j])) * y[j];
    }
  }
  return r;
}

const Component& SncFiber::component(std::string_view name) const {
  for (const auto& c : components) {
    if (c.name == name) return c;
  }
  throw InputError("unknown component '" + std::string(name) + "'");
}

std::vector<TriplePointCheck> check_triple_point_formula(const SncFiber& f) {
  std::vector<TriplePointCheck> out;
  for (std::size_t i = 0; i < f.doubles.size(); ++i) {
    const auto& dc = f.doubles[i];
    const Component& ci = f.component(dc.comp_i);
    const Component& cj = f.component(dc.comp_j);
    auto self = [](const Component& comp, const std::string& cls) {
      auto it = comp.classes.find(cls);
      if (it == comp.classes.end()) throw InputError("unknown class '" + cls + "' on component " + comp.name);
      return comp.lattice.pair(it->second, it->second);
    };
    TriplePointCheck t{i, self(ci, dc.class_i), self(cj, dc.class_j), dc.p3, false};
    t.ok = sgn(t.left + t.right + Rational(static_cast<long>(t.p3))) == 0;
    out.push_back(t);
  }
  return out;
}

Rational adjoint_degree(const SncFiber& f, std::string_view comp, const LatticeVector& c,
                        const LatticeVector& d_restriction, const LatticeVector& double_locus) {
  const Component& y = f.component(comp);
  const auto n = y.lattice.rank();
  if (c.size() != n || d_restriction.size() != n || double_locus.size() != n) {
    throw InputError("class does not live on component " + y.name);
  }
  LatticeVector adj(n);
  for (std::size_t i = 0; i < n; ++i) adj[i] = Rational(static_cast<long>(y.lattice.canonical[i])) + d_restriction[i] + double_locus[i];
  return y.lattice.pair(adj, c);
}

SncFiber parse_snc(std::string_view text) {
  SncFiber f;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto find_comp = [&](const std::string& name, int col) -> Component& {
    for (auto& c : f.components) {
      if (c.name == name) return c;
    }
    throw InputError("unknown component '" + name + "'", line_no, col);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    try {
      if (head == "component") {
        std::string name, kind, extra;
        if (!(words >> name >> kind) || (words >> extra)) throw InputError("expected 'component <name> <surface>'", line_no, 1);
        for (const auto& c : f.components) {
          if (c.name == name) throw InputError("duplicate component '" + name + "'", line_no, column_of(line, name));
        }
        try {
          f.components.push_back(Component{name, SurfaceLattice::from_kind(kind), {}, {}, {}});
        } catch (const InputError& e) {
          throw InputError(e.what(), line_no, column_of(line, kind));
        }
      } else if (head == "class" || head == "divisor") {
        if (f.components.empty()) throw InputError("'" + head + "' before any component", line_no, 1);
        Component& comp = f.components.back();
        std::string name, eq;
        if (!(words >> name >> eq) || eq != "=") throw InputError("expected '" + head + " <name> = ...'", line_no, 1);
        std::string rest;
        std::getline(words, rest);
        const int col = static_cast<int>(line.find('=')) + 2;
        try {
          if (head == "class") {
            if (comp.classes.count(name)) throw InputError("duplicate class '" + name + "'");
            comp.classes[name] = parse_coordinates(rest, comp.lattice);
            comp.class_order.push_back(name);
          } else {
            comp.divisors[name] = parse_combination(rest, comp);
          }
        } catch (const InputError& e) {
          throw InputError(e.what(), line_no, col);
        }
      } else if (head == "double") {
        std::string a, b, p;
        if (!(words >> a >> b >> p) || !p.starts_with("p3=")) throw InputError("expected 'double <comp>:<class> <comp>:<class> p3=<n>'", line_no, 1);
        auto split = [&](const std::string& ref, std::string& comp, std::string& cls) {
          auto colon = ref.find(':');
          if (colon == std::string::npos) throw InputError("expected <comp>:<class>", line_no, column_of(line, ref));
          comp = ref.substr(0, colon);
          cls = ref.substr(colon + 1);
          const Component& c = find_comp(comp, column_of(line, ref));
          if (!c.classes.count(cls)) throw InputError("unknown class '" + cls + "' on component " + comp, line_no, column_of(line, ref));
        };
        DoubleCurve dc;
        split(a, dc.comp_i, dc.class_i);
        split(b, dc.comp_j, dc.class_j);
        if (dc.comp_i == dc.comp_j) throw InputError("a double curve joins two distinct components", line_no, column_of(line, b));
        try {
          dc.p3 = std::stoll(p.substr(3));
        } catch (const std::exception&) {
          throw InputError("bad p3 count", line_no, column_of(line, p));
        }
        if (dc.p3 < 0) throw InputError("p3 must be nonnegative", line_no, column_of(line, p));
        dc.line = line_no;
        f.doubles.push_back(dc);
      } else if (head == "adjoint") {
        AdjointQuery q;
        if (!(words >> q.comp >> q.divisor >> q.locus)) throw InputError("expected 'adjoint <comp> <divisor> <locus> [curves]'", line_no, 1);
        Component& comp = find_comp(q.comp, column_of(line, q.comp));
        for (const auto& name : {q.divisor, q.locus}) {
          if (!comp.divisors.count(name)) throw InputError("unknown divisor '" + name + "'", line_no, column_of(line, name));
        }
        for (std::string w; words >> w;) {
          if (!comp.classes.count(w)) throw InputError("unknown class '" + w + "'", line_no, column_of(line, w));
          q.curves.push_back(w);
        }
        f.queries.push_back(q);
      } else {
        throw InputError("unknown row '" + head + "'", line_no, column_of(line, head));
      }
    } catch (const InputError& e) {
      if (e.line() > 0) throw;
      throw InputError(e.what(), line_no, 1);
    }
  }
  return f;
}

SncFiber read_snc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_snc(ss.str());
}

std::string format_snc_report(const SncFiber& f, bool& ok) {
  ok = true;
  std::string out;
  for (const auto& t : check_triple_point_formula(f)) {
    const auto& dc = f.doubles[t.index];
    out += "double " + dc.comp_i + ":" + dc.class_i + " " + dc.comp_j + ":" + dc.class_j + " " + to_string(t.left) + " + " +
           to_string(t.right) + " + " + std::to_string(t.p3) + (t.ok ? " OK" : " VIOLATION") + "\n";
    ok = ok && t.ok;
  }
  for (const auto& q : f.queries) {
    const Component& comp = f.component(q.comp);
    const auto& names = q.curves.empty() ? comp.class_order : q.curves;
    for (const auto& c : names) {
      Rational v = adjoint_degree(f, q.comp, comp.classes.at(c), comp.divisors.at(q.divisor), comp.divisors.at(q.locus));
      out += "adjoint " + q.comp + " " + c + " " + to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace burniat
