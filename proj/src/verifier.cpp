#include "burniat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "burniat/errors.hpp"
#include "burniat/lp.hpp"
#include "burniat/volume.hpp"

namespace burniat {

namespace {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Constraint reversed(const Constraint& c) {
  Constraint r = c;
  for (auto& x : r.coeffs) x = -x;
  r.rhs = -r.rhs;
  return r;
}

// Inequalities of `piece` that can fail somewhere on the ambient.
std::vector<Constraint> cutting_constraints(const HPolytope& ambient, const HPolytope& piece) {
  std::vector<Constraint> out;
  for (const auto& c : piece.inequalities()) {
    auto sol = maximize(ambient, c.coeffs);
    if (sol.status == LpStatus::Optimal && sol.value <= c.rhs) continue;
    out.push_back(c);
  }
  // An equality leaves a measure-zero piece; either side of it is a gap.
  for (const auto& c : piece.equalities()) {
    out.push_back(Constraint{c.coeffs, c.rhs, Relation::LessEqual});
    out.push_back(reversed(Constraint{c.coeffs, c.rhs, Relation::LessEqual}));
  }
  return out;
}

struct GapSearch {
  const HPolytope& ambient;
  std::vector<std::size_t> ambient_strict;
  std::vector<std::vector<Constraint>> options;

  std::optional<Point> run(HPolytope& current, std::size_t depth) {
    std::vector<std::size_t> strict = ambient_strict;
    for (std::size_t k = ambient.inequalities().size(); k < current.inequalities().size(); ++k) strict.push_back(k);
    auto point = lp_feasible(current, strict);
    if (!point) return std::nullopt;
    if (depth == options.size()) return point;
    for (const auto& c : options[depth]) {
      HPolytope next = current;
      next.add(reversed(c));
      if (auto found = run(next, depth + 1)) return found;
    }
    return std::nullopt;
  }
};

std::string format_members(const std::vector<std::size_t>& members, const std::vector<PieceRow>& rows) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += rows[members[k]].name;
  }
  return out + "}";
}

// Maximal independent sets of the overlap graph restricted to `nodes`.
void maximal_families(const std::vector<std::size_t>& nodes, const std::vector<std::vector<bool>>& clash,
                      std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = nodes.size();
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t v : nodes) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
        bool free = true;
        for (std::size_t u : chosen) free = free && !clash[u][v];
        if (free) return;  // not maximal
      }
      out.push_back(chosen);
      return;
    }
    bool free = true;
    for (std::size_t u : chosen) free = free && !clash[u][nodes[k]];
    if (free) {
      chosen.push_back(nodes[k]);
      go(k + 1);
      chosen.pop_back();
    }
    go(k + 1);
  };
  go(0);
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("BURNIAT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Relevance> check_piece_relevance(const HPolytope& ambient, const std::vector<HPolytope>& pieces) {
  const auto strict = relint_strict_set(ambient);
  std::vector<Relevance> out(pieces.size());
  parallel_for(pieces.size(), [&](std::size_t i) {
    HPolytope cut = intersect(ambient, pieces[i]);
    auto sol = max_min_slack(cut, strict);
    Relevance& r = out[i];
    if (!sol) {
      r.empty = true;
    } else if (sgn(sol->slack) > 0 || strict.empty()) {
      r.relevant = true;
      r.witness = sol->point;
    } else {
      r.max_slack = sol->slack;
    }
  });
  return out;
}

std::vector<Relevance> check_piece_relevance(const TilingSpec& t) {
  return check_piece_relevance(t.ambient_polytope(), t.piece_polytopes());
}

std::optional<Point> find_gap(const HPolytope& ambient, const std::vector<HPolytope>& pieces) {
  GapSearch search{ambient, relint_strict_set(ambient), {}};
  for (const auto& p : pieces) {
    search.options.push_back(cutting_constraints(ambient, p));
    if (search.options.back().empty()) return std::nullopt;  // this piece contains the ambient
  }
  // Pieces with few escape routes first keep the search narrow.
  std::sort(search.options.begin(), search.options.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  HPolytope start = ambient;
  return search.run(start, 0);
}

TilingReport check_cover_and_disjoint(const HPolytope& ambient, const std::vector<HPolytope>& pieces,
                                      const std::vector<std::string>& names) {
  if (names.size() != pieces.size()) throw InputError("piece names do not match pieces");
  TilingReport r;
  r.ambient_volume = normalized_volume(ambient);
  const auto relevance = check_piece_relevance(ambient, pieces);
  r.pieces.resize(pieces.size());
  parallel_for(pieces.size(), [&](std::size_t i) {
    r.pieces[i].name = names[i];
    r.pieces[i].relevant = relevance[i].relevant;
    r.pieces[i].volume = normalized_volume(intersect(ambient, pieces[i]));
  });
  for (const auto& row : r.pieces) r.total += row.volume;

  const std::size_t n = pieces.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  r.overlaps.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    r.overlaps[k] = OverlapRow{i, j, normalized_volume(intersect(intersect(ambient, pieces[i]), pieces[j]))};
  });

  std::vector<std::vector<bool>> clash(n, std::vector<bool>(n, false));
  for (const auto& o : r.overlaps) {
    if (sgn(o.volume) > 0) clash[o.i][o.j] = clash[o.j][o.i] = true;
  }

  if (auto gap = find_gap(ambient, pieces)) {
    r.verdict = Verdict::Gap;
    r.witness = *gap;
  } else {
    for (const auto& o : r.overlaps) {
      if (sgn(o.volume) == 0) continue;
      r.verdict = Verdict::Overlap;
      r.overlap_i = o.i;
      r.overlap_j = o.j;
      r.witness = *relative_interior_point(intersect(intersect(ambient, pieces[o.i]), pieces[o.j]));
      break;
    }
  }
  // The witness search and the volume ledger decide validity independently.
  bool ledger_valid = r.total == r.ambient_volume;
  for (const auto& o : r.overlaps) ledger_valid = ledger_valid && sgn(o.volume) == 0;
  if (ledger_valid != (r.verdict == Verdict::Valid)) {
    throw std::logic_error("volume ledger disagrees with witness search for " + (r.name.empty() ? "tiling" : r.name));
  }

  if (r.verdict != Verdict::Valid) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i) {
      if (r.pieces[i].relevant) nodes.push_back(i);
    }
    std::vector<std::vector<std::size_t>> families;
    maximal_families(nodes, clash, families);
    for (auto& f : families) {
      SubsetRow row;
      row.members = f;
      std::vector<HPolytope> chosen;
      for (auto i : f) {
        chosen.push_back(pieces[i]);
        row.total += r.pieces[i].volume;
      }
      if (auto gap = find_gap(ambient, chosen)) {
        row.verdict = Verdict::Gap;
        row.witness = *gap;
      }
      r.subsets.push_back(std::move(row));
    }
  }
  return r;
}

TilingReport check_cover_and_disjoint(const TilingSpec& t) {
  std::vector<std::string> names;
  for (const auto& p : t.pieces) names.push_back(p.name);
  TilingReport r = check_cover_and_disjoint(t.ambient_polytope(), t.piece_polytopes(), names);
  r.name = t.name;
  r.ambient_name = t.ambient.name();
  if (t.partial) r.verdict = Verdict::Partial;
  return r;
}

std::optional<Point> check_containment(const HPolytope& p, const HPolytope& q) {
  if (p.vars() != q.vars()) throw InputError("containment needs shared variables");
  if (!lp_feasible(p)) return std::nullopt;
  auto probe = [&](const Constraint& c) -> std::optional<Point> {
    // Capping at rhs + 1 keeps the LP bounded and still exposes violations.
    HPolytope capped = p;
    capped.add(Constraint{c.coeffs, c.rhs + 1, Relation::LessEqual});
    auto sol = maximize(capped, c.coeffs);
    if (sol.status == LpStatus::Optimal && sol.value > c.rhs) return sol.point;
    return std::nullopt;
  };
  for (const auto& c : q.inequalities()) {
    if (auto w = probe(c)) return w;
  }
  for (const auto& c : q.equalities()) {
    Constraint le{c.coeffs, c.rhs, Relation::LessEqual};
    if (auto w = probe(le)) return w;
    if (auto w = probe(reversed(le))) return w;
  }
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "VALID";
    case Verdict::Gap: return "GAP";
    case Verdict::Overlap: return "OVERLAP";
    case Verdict::Partial: return "PARTIAL";
  }
  return "?";
}

std::string format_report(const TilingReport& r) {
  std::string out = "tiling " + (r.name.empty() ? std::string("-") : r.name);
  if (!r.ambient_name.empty()) out += " ambient=" + r.ambient_name;
  out += "\n";
  for (const auto& p : r.pieces) {
    out += "piece " + p.name + " " + to_string(p.volume) + (p.relevant ? " relevant" : " irrelevant") + "\n";
  }
  for (const auto& o : r.overlaps) {
    out += "overlap " + r.pieces[o.i].name + " " + r.pieces[o.j].name + " " + to_string(o.volume) + "\n";
  }
  out += "TOTAL " + to_string(r.total) + "\n";
  out += "AMBIENT " + to_string(r.ambient_volume) + "\n";
  out += "VERDICT " + verdict_name(r.verdict);
  if (r.verdict == Verdict::Gap) out += " " + to_string(r.witness);
  if (r.verdict == Verdict::Overlap) {
    out += " " + r.pieces[r.overlap_i].name + " " + r.pieces[r.overlap_j].name + " " + to_string(r.witness);
  }
  out += "\n";
  for (const auto& s : r.subsets) {
    out += "SUBSET " + format_members(s.members, r.pieces) + " " + to_string(s.total) + " " + verdict_name(s.verdict);
    if (s.verdict == Verdict::Gap) out += " " + to_string(s.witness);
    out += "\n";
  }
  return out;
}

std::string report_json(const TilingReport& r) {
  using nlohmann::json;
  auto point = [](const Point& p) {
    json a = json::array();
    for (const auto& x : p) a.push_back(to_string(x));
    return a;
  };
  json j;
  j["tiling"] = r.name;
  j["ambient"] = r.ambient_name;
  j["pieces"] = json::array();
  for (const auto& p : r.pieces) {
    j["pieces"].push_back({{"name", p.name}, {"volume", to_string(p.volume)}, {"relevant", p.relevant}});
  }
  j["overlaps"] = json::array();
  for (const auto& o : r.overlaps) {
    j["overlaps"].push_back({{"i", r.pieces[o.i].name}, {"j", r.pieces[o.j].name}, {"volume", to_string(o.volume)}});
  }
  j["total"] = to_string(r.total);
  j["ambient_volume"] = to_string(r.ambient_volume);
  j["verdict"] = verdict_name(r.verdict);
  if (r.verdict == Verdict::Gap || r.verdict == Verdict::Overlap) j["witness"] = point(r.witness);
  if (r.verdict == Verdict::Overlap) j["overlap"] = {r.pieces[r.overlap_i].name, r.pieces[r.overlap_j].name};
  j["subsets"] = json::array();
  for (const auto& s : r.subsets) {
    json members = json::array();
    for (auto m : s.members) members.push_back(r.pieces[m].name);
    json row{{"members", members}, {"total", to_string(s.total)}, {"verdict", verdict_name(s.verdict)}};
    if (s.verdict == Verdict::Gap) row["witness"] = point(s.witness);
    j["subsets"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace burniat
