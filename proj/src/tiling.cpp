#include "burniat/tiling.hpp"

#include <fstream>
#include <sstream>

#include "burniat/errors.hpp"
#include "burniat/lp.hpp"

namespace burniat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int offset_in(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data());
}

// Parses a ','-separated relation list located inside `line`.
std::vector<Constraint> parse_relations(std::string_view line, std::string_view list, int line_no) {
  std::vector<Constraint> out;
  std::size_t start = 0;
  const auto resolver = burniat_resolver();
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view rel = trim(list.substr(start, comma - start));
    const int base = offset_in(line, list) + static_cast<int>(start);
    if (rel.empty()) throw InputError("empty inequality", line_no, base + 1);
    try {
      Constraint c = parse_relation(rel, burniat_vars().size(), resolver);
      if (c.relation != Relation::LessEqual) throw InputError("pieces take inequalities only", 0, 1);
      out.push_back(std::move(c));
    } catch (const InputError& e) {
      throw InputError(e.what(), line_no, offset_in(line, rel) + std::max(1, e.column()));
    }
    start = comma + 1;
  }
  return out;
}

void parse_header(TilingSpec& t, std::string_view line, std::string_view rest, int line_no) {
  std::size_t pos = 0;
  bool have_name = false, have_ambient = false;
  while (pos < rest.size()) {
    while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
    if (pos >= rest.size()) break;
    std::size_t end = rest.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = rest.size();
    std::string_view word = rest.substr(pos, end - pos);
    const int col = offset_in(line, word) + 1;
    if (word.starts_with("ambient=")) {
      try {
        t.ambient = BurniatAmbient::from_name(word.substr(8));
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no, col);
      }
      have_ambient = true;
    } else if (word.starts_with("source=")) {
      t.source = std::string(word.substr(7));
    } else if (word == "partial") {
      t.partial = true;
    } else if (!have_name) {
      t.name = std::string(word);
      have_name = true;
    } else {
      throw InputError("unexpected '" + std::string(word) + "' in tiling header", line_no, col);
    }
    pos = end;
  }
  if (!have_name) throw InputError("tiling header needs a name", line_no, 1);
  if (!have_ambient) throw InputError("tiling header needs ambient=<name>", line_no, 1);
}

std::string format_piece(const Piece& p) {
  std::string out;
  for (const auto& c : p.constraints) {
    if (!out.empty()) out += ", ";
    out += format_constraint(c, burniat_vars());
  }
  return out;
}

}  // namespace

HPolytope TilingSpec::ambient_polytope() const { return burniat_polytope(ambient); }

HPolytope TilingSpec::piece_polytope(std::size_t i) const {
  HPolytope p = burniat_hypersimplex();
  for (const auto& c : pieces.at(i).constraints) p.add(c);
  return p;
}

std::vector<HPolytope> TilingSpec::piece_polytopes() const {
  std::vector<HPolytope> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) out.push_back(piece_polytope(i));
  return out;
}

std::vector<TilingSpec> parse_tilings(std::string_view text) {
  std::vector<TilingSpec> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.starts_with("tiling ") || body == "tiling") {
      out.emplace_back();
      parse_header(out.back(), line, body.substr(6), line_no);
      continue;
    }
    if (out.empty()) throw InputError("expected 'tiling' header", line_no, offset_in(line, body) + 1);
    TilingSpec& t = out.back();
    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw InputError("expected 'piece <name>:' or 'row:'", line_no, offset_in(line, body) + 1);
    std::string_view head = trim(body.substr(0, colon));
    std::string_view list = body.substr(colon + 1);
    if (head == "row") {
      std::size_t start = 0;
      while (start <= list.size()) {
        std::size_t semi = list.find(';', start);
        if (semi == std::string_view::npos) semi = list.size();
        std::string_view chunk = list.substr(start, semi - start);
        if (!trim(chunk).empty()) {
          Piece p{"M" + std::to_string(t.pieces.size() + 1), parse_relations(line, chunk, line_no)};
          t.pieces.push_back(std::move(p));
        } else if (semi != list.size()) {
          throw InputError("empty piece in row", line_no, offset_in(line, chunk) + 1);
        }
        start = semi + 1;
      }
    } else if (head.starts_with("piece")) {
      std::string_view name = trim(head.substr(5));
      if (head.size() > 5 && head[5] != ' ' && head[5] != '\t') {
        throw InputError("expected 'piece <name>:'", line_no, offset_in(line, head) + 1);
      }
      std::string piece_name = name.empty() ? "M" + std::to_string(t.pieces.size() + 1) : std::string(name);
      for (const auto& q : t.pieces) {
        if (q.name == piece_name) throw InputError("duplicate piece '" + piece_name + "'", line_no, offset_in(line, head) + 1);
      }
      t.pieces.push_back(Piece{piece_name, parse_relations(line, list, line_no)});
    } else {
      throw InputError("expected 'piece <name>:' or 'row:'", line_no, offset_in(line, body) + 1);
    }
  }
  return out;
}

std::vector<TilingSpec> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tilings(ss.str());
}

std::string write_tilings(const std::vector<TilingSpec>& tilings) {
  std::string out;
  for (const auto& t : tilings) {
    out += "tiling " + t.name + " ambient=" + t.ambient.name();
    if (t.partial) out += " partial";
    if (!t.source.empty()) out += " source=" + t.source;
    out += "\n";
    for (const auto& p : t.pieces) out += "piece " + p.name + ": " + format_piece(p) + "\n";
  }
  return out;
}

std::string DroppedPiece::certificate() const {
  if (empty) return "piece does not meet the ambient";
  return "max least slack on relint = " + to_string(max_slack);
}

Restriction restrict_tiling(const TilingSpec& t, const BurniatAmbient& target) {
  if (target.degree != t.ambient.degree && target.degree != t.ambient.degree - 1) {
    throw InputError("cannot restrict " + t.ambient.name() + " to " + target.name());
  }
  Restriction r;
  r.tiling = t;
  r.tiling.ambient = target;
  r.tiling.pieces.clear();
  const HPolytope amb = burniat_polytope(target);
  const auto strict = relint_strict_set(amb);
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    // Ambient rows come first, so the strict indices carry over unchanged.
    HPolytope cut = intersect(amb, t.piece_polytope(i));
    auto sol = max_min_slack(cut, strict);
    if (sol && sgn(sol->slack) > 0) {
      r.tiling.pieces.push_back(t.pieces[i]);
    } else {
      r.dropped.push_back(DroppedPiece{t.pieces[i].name, sol ? sol->slack : Rational(0), !sol});
    }
  }
  return r;
}

}  // namespace burniat
