#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "burniat/burniat.hpp"
#include "burniat/cover.hpp"
#include "burniat/errors.hpp"
#include "burniat/hypersimplex.hpp"
#include "burniat/lattice.hpp"
#include "burniat/lc.hpp"
#include "burniat/lp.hpp"
#include "burniat/snc.hpp"
#include "burniat/tiling.hpp"
#include "burniat/verifier.hpp"
#include "burniat/vertices.hpp"
#include "burniat/volume.hpp"

using namespace burniat;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

bool is_ambient_name(const std::string& s) {
  return s == "bur6" || s == "bur5" || s == "bur4-nodal" || s == "bur4-nonnodal" || s == "bur3";
}

// A Burniat ambient name, "delta39", or a polytope file.
HPolytope load_polytope(const std::string& spec) {
  if (is_ambient_name(spec)) return burniat_polytope(BurniatAmbient::from_name(spec));
  if (spec == "delta39") return burniat_hypersimplex();
  return read_polytope_file(spec);
}

int cmd_info(const std::string& spec, bool canonical) {
  HPolytope p = load_polytope(spec);
  if (canonical) {
    std::cout << serialize_polytope(p);
    return kPass;
  }
  std::cout << "vars";
  for (const auto& v : p.vars()) std::cout << " " << v;
  std::cout << "\nequalities " << p.equalities().size() << "\ninequalities " << p.inequalities().size() << "\n";
  const int dim = affine_dim(p);
  std::cout << "dim " << dim << "\n";
  if (dim >= 0) std::cout << "vertices " << enumerate_vertices(p).size() << "\n";
  return kPass;
}

int cmd_volume(const std::string& spec, const std::string& order) {
  HPolytope p = load_polytope(spec);
  TriangulationOrder o = order == "reverse" ? TriangulationOrder::Reverse : TriangulationOrder::Lexicographic;
  std::cout << to_string(normalized_volume(p, o)) << "\n";
  return kPass;
}

int cmd_contains(const std::string& inner, const std::string& outer) {
  auto witness = check_containment(load_polytope(inner), load_polytope(outer));
  if (!witness) {
    std::cout << "CONTAINED\n";
    return kPass;
  }
  std::cout << "NOT-CONTAINED " << to_string(*witness) << "\n";
  return kFail;
}

int cmd_verify(const std::string& file, const std::string& ambient, bool json) {
  auto tilings = load_table(file);
  if (!ambient.empty()) {
    BurniatAmbient amb = BurniatAmbient::from_name(ambient);
    for (auto& t : tilings) t.ambient = amb;
  }
  bool all_valid = true;
  std::string json_out = "[";
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    TilingReport r = check_cover_and_disjoint(tilings[i]);
    all_valid = all_valid && r.verdict == Verdict::Valid;
    if (json) {
      json_out += (i ? ",\n" : "\n") + report_json(r);
    } else {
      std::cout << format_report(r);
    }
  }
  if (json) std::cout << json_out << (tilings.empty() ? "]\n" : "\n]\n");
  std::cerr << tilings.size() << " tilings\n";
  return all_valid ? kPass : kFail;
}

int cmd_restrict(const std::string& file, const std::string& from, const std::string& to, const std::string& only,
                 const std::string& out_path) {
  BurniatAmbient source = BurniatAmbient::from_name(from);
  BurniatAmbient target = BurniatAmbient::from_name(to);
  std::vector<TilingSpec> restricted;
  std::string report;
  bool found = only.empty();
  for (const auto& t : load_table(file)) {
    if (!only.empty() && t.name != only) continue;
    found = true;
    if (t.ambient.name() != source.name()) {
      throw InputError("tiling " + t.name + " lives on " + t.ambient.name() + ", not " + from);
    }
    Restriction r = restrict_tiling(t, target);
    for (const auto& d : r.dropped) report += "# dropped " + t.name + " " + d.name + ": " + d.certificate() + "\n";
    restricted.push_back(std::move(r.tiling));
  }
  if (!found) throw InputError("no tiling named '" + only + "'");
  std::string text = write_tilings(restricted);
  if (out_path.empty()) {
    std::cout << text << report;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
    std::cout << report;
  }
  return kPass;
}

int cmd_lc(const std::string& file) {
  ArrangementSpec a = read_arrangement_file(file);
  LcVerdict v = is_lc(a, a.weight().values());
  std::cout << format_verdict(a, v) << "\n";
  std::cout << (is_stable(a) ? "STABLE" : "NOT-STABLE") << "\n";
  return v.lc ? kPass : kFail;
}

int cmd_k2(std::optional<int> k, const std::string& file, int degree) {
  if (k.has_value() == !file.empty()) throw InputError("give either --burniat <k> or a cover file");
  CoverData c = k ? burniat_cover(*k) : read_cover_file(file);
  auto rel = check_fundamental_relations(c);
  std::cout << "K^2 = " << to_string(cover_k_squared(c, degree)) << "\n";
  if (!rel.ok) {
    std::cout << "FUNDAMENTAL-RELATIONS FAIL " << rel.obstruction << "\n";
    return kFail;
  }
  for (int i = 0; i < 3; ++i) std::cout << "L_chi" << i + 1 << " = " << to_string(rel.l[i]) << "\n";
  return kPass;
}

int cmd_nef(const std::string& config, const std::string& divisor) {
  PointConfiguration pc = burniat_configuration(config);
  QDivClass d = divisor.empty() ? Rational(-1) * QDivClass(canonical_class(pc.k())) : QDivClass(parse_class(divisor));
  if (d.k() != pc.k()) throw InputError("divisor needs " + std::to_string(pc.k()) + " multiplicities");
  NefReport r = nef_ample_report(pc, d);
  std::cout << format_nef_report(r) << "\n";
  return kPass;
}

int cmd_snc(const std::string& file) {
  bool ok = true;
  std::cout << format_snc_report(read_snc_file(file), ok);
  return ok ? kPass : kFail;
}

int cmd_neg_curves(std::size_t k, int self_int, int max_degree, const std::string& config) {
  std::vector<DivClass> classes;
  if (config.empty()) {
    classes = enumerate_neg_curves(k, self_int, max_degree);
  } else {
    PointConfiguration pc = burniat_configuration(config);
    classes = self_int == -2 ? pc.effective_roots() : pc.minus_one_curves();
  }
  for (const auto& c : classes) std::cout << to_string(c) << "\n";
  std::cerr << classes.size() << " classes\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burniat polytopes, tilings and surface lattices"};
  app.require_subcommand(1);

  std::string spec, spec2, file, ambient, from, to, only, out_path, order = "lex", config, divisor;
  bool json = false;
  bool canonical = false;
  std::optional<int> burniat_k;
  int degree = 4, self_int = -1, max_degree = 6;
  std::size_t k = 0;

  auto* info = app.add_subcommand("info", "Dimension and vertex count of a polytope");
  info->add_option("polytope", spec, "Polytope file or ambient name (bur6, bur5, bur4-nodal, bur4-nonnodal, bur3, delta39)")->required();
  info->add_flag("--canonical", canonical, "Print the constraint system in canonical form instead");
  auto* volume = app.add_subcommand("volume", "Normalized volume");
  volume->add_option("polytope", spec, "Polytope file or ambient name")->required();
  volume->add_option("--order", order, "Pulling order: lex or reverse")->check(CLI::IsMember({"lex", "reverse"}));
  auto* contains = app.add_subcommand("contains", "Decide P ⊆ Q");
  contains->add_option("inner", spec, "P")->required();
  contains->add_option("outer", spec2, "Q")->required();
  auto* verify = app.add_subcommand("verify-tiling", "Verify every tiling of a file");
  verify->add_option("file", file, "Tiling file")->required();
  verify->add_option("--ambient", ambient, "Override the ambient of every tiling");
  verify->add_flag("--json", json, "Machine-readable report");
  auto* restrict = app.add_subcommand("restrict", "Restrict tilings to a smaller ambient");
  restrict->add_option("file", file, "Tiling file")->required();
  restrict->add_option("--from", from, "Source ambient")->required();
  restrict->add_option("--to", to, "Target ambient")->required();
  restrict->add_option("--tiling", only, "Restrict only this tiling");
  restrict->add_option("-o,--output", out_path, "Write the restricted tilings here");
  auto* lc = app.add_subcommand("lc", "Log canonicity and stability of a weighted arrangement");
  lc->add_option("file", file, "Arrangement file")->required();
  auto* k2 = app.add_subcommand("k2", "K^2 of a Z2^2 cover and its fundamental relations");
  k2->add_option("file", file, "Cover file");
  k2->add_option("--burniat", burniat_k, "Burniat data on Bl_k P^2, k = 3..6");
  k2->add_option("--degree", degree, "Cover degree");
  auto* nef = app.add_subcommand("nef", "Nef/ample test on a Burniat configuration");
  nef->add_option("--burniat-config", config, "d6, d5, d4-nodal, d4-nonnodal, d3")->required();
  nef->add_option("--divisor", divisor, "Class \"d; m1 ... mk\" (default -K)");
  auto* snc = app.add_subcommand("snc", "Triple point formula and adjoint degrees of an SNC fiber");
  snc->add_option("file", file, "Fiber file")->required();
  auto* neg = app.add_subcommand("neg-curves", "Enumerate (-1)- or (-2)-classes");
  neg->add_option("--k", k, "Number of blown-up points");
  neg->add_option("--self", self_int, "Self-intersection, -1 or -2")->check(CLI::IsMember({-1, -2}));
  neg->add_option("--max-degree", max_degree, "Degree bound");
  neg->add_option("--burniat-config", config, "List the irreducible or effective classes of this configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*info) return cmd_info(spec, canonical);
    if (*volume) return cmd_volume(spec, order);
    if (*contains) return cmd_contains(spec, spec2);
    if (*verify) return cmd_verify(file, ambient, json);
    if (*restrict) return cmd_restrict(file, from, to, only, out_path);
    if (*lc) return cmd_lc(file);
    if (*k2) return cmd_k2(burniat_k, file, degree);
    if (*nef) return cmd_nef(config, divisor);
    if (*snc) return cmd_snc(file);
    if (*neg) return cmd_neg_curves(k, self_int, max_degree, config);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnboundedError& e) {
    std::cerr << "error: polytope is unbounded\n";
    return kInputError;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
