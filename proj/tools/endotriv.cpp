// Command-line front end: one subcommand per computation, text or JSON
// output. Exit status 2 on bad input or a failed precondition, 1 when a
// consistency check fails, 0 otherwise.

#include <iomanip>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "endotriv/catalog.hpp"
#include "endotriv/endo.hpp"
#include "endotriv/report.hpp"
#include "endotriv/steinberg.hpp"
#include "endotriv/suite.hpp"

using namespace endotriv;

namespace {

struct Options {
  std::string group;
  std::uint64_t prime = 0;
  std::string field = "auto";
  std::string collection;
  bool json = false;
  std::uint64_t seed = 0;
  std::string suite = "paper";
};

CollectionKind parse_collection(const std::string& s, CollectionKind fallback) {
  static const std::map<std::string, CollectionKind> names{
      {"sp", CollectionKind::all}, {"bp", CollectionKind::radical}, {"ap", CollectionKind::elementary_abelian}};
  if (s.empty()) return fallback;
  auto it = names.find(s);
  if (it == names.end()) throw InputError("collection must be sp, bp or ap");
  return it->second;
}

std::uint64_t parse_field(const std::string& s, const AbGroup& t, std::uint64_t p) {
  if (s == "auto") return auto_field(t, p);
  std::uint64_t q = 0, qp = 0;
  try {
    q = std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("field must be a prime power or 'auto'");
  }
  if (!prime_power(q, &qp) || qp != p) throw InputError("field size must be a power of p");
  return q;
}

LatticePtr lattice_for(const Options& o) {
  if (o.group.empty()) throw InputError("--group is required");
  if (o.prime == 0) throw InputError("--prime is required");
  return make_lattice(load_group(o.group), o.prime);
}

Json header(const Options& o) {
  Json j;
  j["group"] = o.group;
  j["p"] = o.prime;
  return j;
}

int emit(const Options& o, const Json& j, const std::string& text, int code = 0) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

int cmd_compute(const Options& o) {
  if (o.group.empty() || o.prime == 0) throw InputError("--group and --prime are required");
  const Group g = load_group(o.group);
  std::uint64_t q = 0;
  if (o.field != "auto") q = parse_field(o.field, AbGroup(), o.prime);
  const TReport r = cross_check(o.group, g, o.prime, q);
  std::ostringstream s;
  auto line = [&s](const std::string& label, const std::string& value) {
    s << "  " << std::left << std::setw(24) << label << value << "\n";
  };
  s << o.group << " at p=" << o.prime << " (|G| = " << r.order << ")\n";
  line("orbit category", r.orbit.str());
  line("rho (r=" + std::to_string(r.ct.r) + ", bound " + std::to_string(r.ct.bound) + ")", r.ct.group.str());
  line("normalizer on B_p", r.normalizer_bp.str());
  line("normalizer on A_p", r.normalizer_ap.str());
  line("centralizer colimit", r.centralizer.colim.str() + (r.centralizer.exact() ? " (exact)" : " (NOT exact)"));
  line("H1(F*)", r.centralizer.h1_fusion.str());
  line("T characters over F_" + std::to_string(r.q), r.t_characters.str());
  line("G0 proper", r.g0.proper ? "yes" : "no");
  line("consistent", r.consistent ? "yes" : "no");
  line("diagnostics", r.diagnostics_ok ? "ok" : "FAILED");
  return emit(o, to_json(r), s.str(), r.consistent && r.diagnostics_ok ? 0 : 1);
}

int cmd_h1_orbit(const Options& o) {
  const auto L = lattice_for(o);
  const CollectionKind kind = parse_collection(o.collection, CollectionKind::all);
  const CategoryModel m = category_model(L, kind, CategoryKind::orbit, o.seed);
  Json j = header(o);
  j["collection"] = to_string(kind);
  j["objects"] = m.category.object_count();
  j["morphisms"] = m.category.morphism_count();
  j["h1"] = to_json(m.h1.group);
  j["h1_pprime"] = to_json(m.h1_pprime.group);
  return emit(o, j, "H1 = " + m.h1.group.str() + ", p'-part " + m.h1_pprime.group.str() + "\n");
}

int cmd_ct(const Options& o) {
  const auto L = lattice_for(o);
  const CtResult r = t_via_ct(L);
  const CtResult fast = t_via_ct(L, true);
  const RhoSequence seq = rho_sequence(*L);
  Json j = header(o);
  j["quotient"] = to_json(r.group);
  j["r"] = r.r;
  j["bound"] = r.bound;
  std::vector<std::size_t> orders;
  for (const auto& step : seq.steps) orders.push_back(step.back().order());
  j["rho_S_orders"] = orders;
  j["radical_mode_agrees"] = fast.group == r.group;
  return emit(o, j,
              "N_G(S)/rho(S) = " + r.group.str() + ", stable at r = " + std::to_string(r.r) + " (bound " +
                  std::to_string(r.bound) + ")\n",
              fast.group == r.group ? 0 : 1);
}

int cmd_normalizer(const Options& o) {
  const auto L = lattice_for(o);
  const CollectionKind kind = parse_collection(o.collection, CollectionKind::radical);
  const ChainClasses chains(Collection(L, kind));
  const NormalizerColimit n = normalizer_colimit(chains);
  Json j = header(o);
  j["collection"] = to_string(kind);
  j["chain_classes"] = chains.classes().size();
  j["arrows"] = n.diagram.arrows.size();
  j["colimit"] = to_json(n.colimit.group);
  return emit(o, j, "colimit over " + std::to_string(chains.classes().size()) + " chain classes = " +
                        n.colimit.group.str() + "\n");
}

int cmd_centralizer(const Options& o) {
  const CentralizerReport r = t_via_centralizer(lattice_for(o));
  Json j = header(o);
  j["centralizer"] = to_json(r);
  return emit(o, j,
              "colim H1(C_G(V))_{p'} = " + r.colim.str() + ", H1(F*) = " + r.h1_fusion.str() +
                  (r.exact() ? ", exact at H1(O)\n" : ", NOT exact at H1(O)\n"),
              r.exact() ? 0 : 1);
}

int cmd_fusion(const Options& o) {
  const FusionBounds b = fusion_bounds(lattice_for(o));
  Json j = header(o);
  j["fusion"] = to_json(b);
  return emit(o, j,
              "H1(O^c) = " + b.orbit_centric.str() + ", H1(F^c) = " + b.fusion_centric.str() +
                  ", H1(O*) = " + b.orbit_all.str() + ", H1(F*) = " + b.fusion_all.str() +
                  (b.ok() ? ", bounds hold\n" : ", bounds FAIL\n"),
              b.ok() ? 0 : 1);
}

int cmd_steinberg(const Options& o) {
  const auto L = lattice_for(o);
  const CategoryModel m = category_model(L, CollectionKind::all, CategoryKind::orbit);
  const std::uint64_t q = parse_field(o.field, m.h1.group, o.prime);
  const ChainClasses chains(m.collection);
  const OrderComplex x = order_complex(chains);
  const FiniteField f(q);
  const bool brown = brown_congruence(chains);
  Json j = header(o);
  j["q"] = q;
  j["reduced_euler"] = reduced_euler(chains);
  j["brown_ok"] = brown;
  Json chars = Json::array();
  std::ostringstream s;
  s << "reduced Euler characteristic " << reduced_euler(chains) << (brown ? " (divisible by |S|)\n" : " (NOT divisible)\n");
  bool ok = brown;
  for (const auto& chi : all_characters(m.h1.group, q)) {
    const FqComplex c = twisted_complex(x, m.category, m.h1, chi, f, o.seed);
    const auto dims = homology_dims(f, c);
    ok = ok && squares_to_zero(f, c);
    Json e = complex_json(c, dims, brown);
    e["exponents"] = chi.exps;
    chars.push_back(e);
    s << "character (";
    for (std::size_t i = 0; i < chi.exps.size(); ++i) s << (i ? "," : "") << chi.exps[i];
    s << "): homology dims";
    for (auto d : dims) s << " " << d;
    s << "\n";
  }
  j["characters"] = chars;
  return emit(o, j, s.str(), ok ? 0 : 1);
}

int cmd_webb(const Options& o) {
  const auto L = lattice_for(o);
  const CollectionKind kind = parse_collection(o.collection, CollectionKind::all);
  const WebbReport w = webb_check(ChainClasses(Collection(L, kind)));
  Json j = header(o);
  j["collection"] = to_string(kind);
  j["webb"] = to_json(w);
  return emit(o, j,
              std::string(w.ok() ? "orbit space is acyclic" : "orbit space is NOT acyclic") +
                  ", simple connectivity " + (w.simply_connected_proven ? "proven" : "inconclusive") + "\n",
              w.ok() ? 0 : 1);
}

int cmd_check(const Options& o) {
  if (o.suite != "paper") throw InputError("unknown suite: " + o.suite);
  Json rows = Json::array();
  const auto result = acceptance_suite([&](const SuiteRow& r) {
    if (!o.json)
      std::cout << (r.pass ? "PASS" : "FAIL") << (r.expected_red && !r.pass ? " (expected)" : "") << " [" << r.id
                << "] " << r.title << " -- " << r.detail << "\n"
                << std::flush;
  });
  bool ok = true;
  for (const auto& r : result) {
    ok = ok && (r.pass || r.expected_red);
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"expected_red", r.expected_red},
                    {"detail", r.detail}});
  }
  if (o.json) std::cout << rows.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow-trivial modules via H1 of the orbit category"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--group", o.group, "catalog name (S7, A5, SL(2,3), 3^1+2:8, ...) or JSON file");
  app.add_option("--prime", o.prime, "the prime p");
  app.add_option("--field", o.field, "q or 'auto'")->capture_default_str();
  app.add_option("--collection", o.collection, "sp, bp or ap");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "seed for spanning trees and gauges");

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  handlers[app.add_subcommand("compute", "all methods and cross-checks")] = cmd_compute;
  handlers[app.add_subcommand("h1-orbit", "H1 of the orbit category")] = cmd_h1_orbit;
  handlers[app.add_subcommand("ct", "iterated local subgroups rho^i(S)")] = cmd_ct;
  handlers[app.add_subcommand("normalizer", "colimit over chain normalizers")] = cmd_normalizer;
  handlers[app.add_subcommand("centralizer", "centralizer decomposition")] = cmd_centralizer;
  handlers[app.add_subcommand("fusion", "fusion-system bounds")] = cmd_fusion;
  handlers[app.add_subcommand("steinberg", "twisted Steinberg complexes")] = cmd_steinberg;
  handlers[app.add_subcommand("webb", "orbit-space homology")] = cmd_webb;
  auto* check = app.add_subcommand("check", "reproduction suite");
  check->add_option("--suite", o.suite, "suite name")->capture_default_str();
  handlers[check] = cmd_check;

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
