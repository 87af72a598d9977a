#include "burniat/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "burniat/errors.hpp"

namespace burniat {

Rational Constraint::evaluate(const Point& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) s += coeffs[i] * x[i];
  }
  return s;
}

bool Constraint::satisfied_by(const Point& x) const {
  Rational v = evaluate(x);
  return relation == Relation::Equal ? v == rhs : v <= rhs;
}

bool Constraint::strictly_satisfied_by(const Point& x) const { return evaluate(x) < rhs; }

bool Constraint::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Constraint Constraint::integer_cleared() const {
  std::vector<Rational> all = coeffs;
  all.push_back(rhs);
  Integer den = common_denominator(all);
  Integer g = 0;
  for (const auto& v : all) {
    Integer n = v.get_num() * (den / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) g = 1;
  Rational scale(den, g);
  scale.canonicalize();
  Constraint out = *this;
  for (auto& c : out.coeffs) c *= scale;
  out.rhs *= scale;
  return out;
}

Rational AffineForm::evaluate(const Point& x) const {
  Rational s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
  return s;
}

HPolytope::HPolytope(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw InputError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

std::size_t HPolytope::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw InputError("unknown variable '" + std::string(name) + "'");
}

bool HPolytope::has_var(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

void HPolytope::add(Constraint c) {
  if (c.coeffs.size() != vars_.size()) throw InputError("constraint width does not match variable count");
  if (c.is_zero()) {
    bool trivially_true = c.relation == Relation::Equal ? sgn(c.rhs) == 0 : sgn(c.rhs) >= 0;
    if (trivially_true) throw InputError("constraint has no nonzero coefficient");
  }
  (c.relation == Relation::Equal ? equalities_ : inequalities_).push_back(std::move(c));
}

void HPolytope::add_less_equal(const std::map<std::string, Rational>& coeffs, const Rational& rhs) {
  Constraint c{std::vector<Rational>(vars_.size()), rhs, Relation::LessEqual};
  for (const auto& [name, value] : coeffs) c.coeffs[index_of(name)] += value;
  add(std::move(c));
}

void HPolytope::add_equal(const std::map<std::string, Rational>& coeffs, const Rational& rhs) {
  Constraint c{std::vector<Rational>(vars_.size()), rhs, Relation::Equal};
  for (const auto& [name, value] : coeffs) c.coeffs[index_of(name)] += value;
  add(std::move(c));
}

bool HPolytope::contains(const Point& x) const {
  if (x.size() != vars_.size()) return false;
  for (const auto& c : equalities_) {
    if (!c.satisfied_by(x)) return false;
  }
  for (const auto& c : inequalities_) {
    if (!c.satisfied_by(x)) return false;
  }
  return true;
}

SymbolResolver HPolytope::variable_resolver() const {
  return [vars = vars_](std::string_view name) -> std::optional<AffineForm> {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) {
        AffineForm f{std::vector<Rational>(vars.size()), 0};
        f.coeffs[i] = 1;
        return f;
      }
    }
    return std::nullopt;
  };
}

HPolytope intersect(const HPolytope& p, const HPolytope& q) {
  if (p.vars() != q.vars()) throw InputError("cannot intersect polytopes over different variables");
  HPolytope out = p;
  for (const auto& c : q.equalities()) out.add(c);
  for (const auto& c : q.inequalities()) out.add(c);
  return out;
}

namespace {

enum class TokenKind { Number, Symbol, Plus, Minus, Star, LessEqual, GreaterEqual, Equal, End };

struct Token {
  TokenKind kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({TokenKind::Symbol, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (ch == '+') {
      out.push_back({TokenKind::Plus, "+", col});
      ++i;
    } else if (ch == '-') {
      out.push_back({TokenKind::Minus, "-", col});
      ++i;
    } else if (ch == '*') {
      out.push_back({TokenKind::Star, "*", col});
      ++i;
    } else if (ch == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({TokenKind::LessEqual, "<=", col});
      i += 2;
    } else if (ch == '>' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({TokenKind::GreaterEqual, ">=", col});
      i += 2;
    } else if (ch == '=') {
      out.push_back({TokenKind::Equal, "=", col});
      ++i;
    } else {
      throw InputError(std::string("unexpected character '") + ch + "'", 0, col);
    }
  }
  out.push_back({TokenKind::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

bool is_relation(TokenKind k) {
  return k == TokenKind::LessEqual || k == TokenKind::GreaterEqual || k == TokenKind::Equal;
}

// Parses terms until a relation token or the end; accumulates sign * form.
std::size_t parse_side(const std::vector<Token>& tokens, std::size_t pos, std::size_t n_vars,
                       const SymbolResolver& resolve, AffineForm& acc) {
  bool any = false;
  while (tokens[pos].kind != TokenKind::End && !is_relation(tokens[pos].kind)) {
    int sign = 1;
    if (tokens[pos].kind == TokenKind::Plus || tokens[pos].kind == TokenKind::Minus) {
      sign = tokens[pos].kind == TokenKind::Minus ? -1 : 1;
      ++pos;
    }
    const Token& t = tokens[pos];
    Rational coeff = sign;
    bool has_number = false;
    if (t.kind == TokenKind::Number) {
      try {
        coeff *= parse_rational(t.text);
      } catch (const InputError& e) {
        throw InputError(e.what(), 0, t.column);
      }
      has_number = true;
      ++pos;
      if (tokens[pos].kind == TokenKind::Star) {
        ++pos;
        if (tokens[pos].kind != TokenKind::Symbol) throw InputError("expected a symbol after '*'", 0, tokens[pos].column);
      }
    }
    if (tokens[pos].kind == TokenKind::Symbol) {
      const Token& sym = tokens[pos];
      auto form = resolve(sym.text);
      if (!form) throw InputError("unknown symbol '" + sym.text + "'", 0, sym.column);
      for (std::size_t i = 0; i < n_vars; ++i) acc.coeffs[i] += coeff * form->coeffs[i];
      acc.constant += coeff * form->constant;
      ++pos;
    } else if (has_number) {
      acc.constant += coeff;
    } else {
      throw InputError("expected a term, found '" + tokens[pos].text + "'", 0, tokens[pos].column);
    }
    any = true;
  }
  if (!any) throw InputError("empty side of relation", 0, tokens[pos].column);
  return pos;
}

}  // namespace

Constraint parse_relation(std::string_view text, std::size_t n_vars, const SymbolResolver& resolve) {
  auto tokens = tokenize(text);
  AffineForm lhs{std::vector<Rational>(n_vars), 0};
  AffineForm rhs{std::vector<Rational>(n_vars), 0};
  std::size_t pos = parse_side(tokens, 0, n_vars, resolve, lhs);
  if (!is_relation(tokens[pos].kind)) throw InputError("missing relation '<=', '>=' or '='", 0, tokens[pos].column);
  TokenKind rel = tokens[pos].kind;
  pos = parse_side(tokens, pos + 1, n_vars, resolve, rhs);
  if (tokens[pos].kind != TokenKind::End) throw InputError("unexpected '" + tokens[pos].text + "'", 0, tokens[pos].column);

  Constraint c{std::vector<Rational>(n_vars), rhs.constant - lhs.constant,
               rel == TokenKind::Equal ? Relation::Equal : Relation::LessEqual};
  for (std::size_t i = 0; i < n_vars; ++i) c.coeffs[i] = lhs.coeffs[i] - rhs.coeffs[i];
  if (rel == TokenKind::GreaterEqual) {
    for (auto& v : c.coeffs) v = -v;
    c.rhs = -c.rhs;
  }
  return c;
}

std::string format_constraint(const Constraint& c, const std::vector<std::string>& vars) {
  Constraint k = c.integer_cleared();
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Rational& v = k.coeffs[i];
    if (sgn(v) == 0) continue;
    Rational mag = abs(v);
    if (first) {
      if (sgn(v) < 0) out += "-";
    } else {
      out += sgn(v) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += vars[i];
    first = false;
  }
  if (first) out += "0";
  out += k.relation == Relation::Equal ? " = " : " <= ";
  out += to_string(k.rhs);
  return out;
}

HPolytope parse_polytope(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<HPolytope> p;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!p) {
      std::istringstream words(line);
      std::string head;
      words >> head;
      if (head != "vars") throw InputError("expected 'vars' header", line_no, static_cast<int>(first) + 1);
      std::vector<std::string> vars;
      for (std::string w; words >> w;) vars.push_back(w);
      try {
        p.emplace(std::move(vars));
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no, static_cast<int>(first) + 1);
      }
      continue;
    }
    try {
      p->add(parse_relation(line, p->ambient_dim(), p->variable_resolver()));
    } catch (const InputError& e) {
      throw InputError(e.what(), line_no, std::max(1, e.column()));
    }
  }
  if (!p) throw InputError("missing 'vars' header", std::max(1, line_no), 1);
  return *p;
}

HPolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope(ss.str());
}

std::string serialize_polytope(const HPolytope& p) {
  std::string out = "vars";
  for (const auto& v : p.vars()) out += " " + v;
  out += "\n";
  for (const auto& c : p.equalities()) out += format_constraint(c, p.vars()) + "\n";
  for (const auto& c : p.inequalities()) out += format_constraint(c, p.vars()) + "\n";
  return out;
}

}  // namespace burniat
