#include "endotriv/report.hpp"

namespace endotriv {

Json to_json(const AbGroup& a) {
  Json j;
  j["free_rank"] = a.free_rank();
  j["torsion"] = a.torsion();
  return j;
}

Json to_json(const CentralizerReport& r) {
  Json j;
  j["colim"] = to_json(r.colim);
  j["h1_fusion"] = to_json(r.h1_fusion);
  j["h1_fusion_pprime"] = to_json(r.h1_fusion_pprime);
  j["h1_orbit_pprime"] = to_json(r.h1_orbit_pprime);
  j["relations_ok"] = r.relations_ok;
  j["surjective"] = r.surjective;
  j["composite_zero"] = r.composite_zero;
  j["image_order"] = r.image_order;
  j["kernel_order"] = r.kernel_order;
  j["exact"] = r.exact();
  j["centralizers_pprime_trivial"] = r.centralizers_pprime_trivial;
  j["predicts_zero"] = r.predicts_zero;
  return j;
}

Json to_json(const FusionBounds& b) {
  Json j;
  j["N/S"] = to_json(b.n_over_s);
  j["N/SC"] = to_json(b.n_over_sc);
  j["orbit_centric"] = to_json(b.orbit_centric);
  j["fusion_centric"] = to_json(b.fusion_centric);
  j["orbit"] = to_json(b.orbit_all);
  j["fusion"] = to_json(b.fusion_all);
  j["fusion_centric_full"] = to_json(b.fusion_centric_full);
  j["fusion_full"] = to_json(b.fusion_all_full);
  j["surjections"] = {{"N/S->orbit_centric", b.n_onto_orbit_centric},
                      {"orbit_centric->orbit", b.orbit_centric_onto_orbit},
                      {"N/SC->fusion_centric", b.nsc_onto_fusion_centric},
                      {"fusion_centric->fusion", b.fusion_centric_onto_fusion},
                      {"orbit->fusion", b.orbit_onto_fusion}};
  j["commutes"] = b.commutes;
  j["centric_radicals_centric"] = b.centric_radicals_centric;
  j["centric_iso"] = b.centric_iso ? Json(*b.centric_iso) : Json(nullptr);
  j["ok"] = b.ok();
  return j;
}

Json to_json(const WebbReport& w) {
  Json j;
  j["closure_ok"] = w.closure_ok;
  Json h = Json::array();
  for (const auto& a : w.reduced_homology) h.push_back(to_json(a));
  j["reduced_homology"] = h;
  j["acyclic"] = w.acyclic;
  j["edge_path_h1_trivial"] = w.edge_path_h1_trivial;
  j["presentation_generators"] = w.presentation.generators;
  j["presentation_relators"] = w.presentation.relators.size();
  j["simply_connected"] = w.simply_connected_proven ? "proven" : "inconclusive";
  j["ok"] = w.ok();
  return j;
}

Json to_json(const TReport& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["p"] = r.p;
  j["q"] = r.q;
  Json m;
  m["orbit"] = {{"h1", to_json(r.orbit)}};
  m["ct"] = {{"group", to_json(r.ct.group)},
             {"r", r.ct.r},
             {"bound", r.ct.bound},
             {"radical_mode_agrees", r.ct_fast_agrees}};
  m["normalizer_Bp"] = {{"group", to_json(r.normalizer_bp)}, {"chain_classes", r.chain_classes_bp}};
  m["normalizer_Ap"] = {{"group", to_json(r.normalizer_ap)}, {"chain_classes", r.chain_classes_ap}};
  j["methods"] = m;
  j["centralizer"] = to_json(r.centralizer);
  j["fusion"] = to_json(r.fusion);
  Json rn;
  rn["simple_hypothesis"] = r.radicals_normal.simple_hypothesis;
  rn["general_hypothesis"] = r.radicals_normal.general_hypothesis;
  rn["applicable"] = r.radicals_normal.applicable();
  rn["kernel"] = r.radicals_normal.kernel ? to_json(*r.radicals_normal.kernel) : Json(nullptr);
  j["radicals_normal"] = rn;
  j["g0"] = {{"order", r.g0.g0.order()},
             {"N/S", to_json(r.g0.n_over_s)},
             {"orbit", to_json(r.g0.orbit)},
             {"G0", to_json(r.g0.g0_pprime)},
             {"G", to_json(r.g0.g_pprime)},
             {"surjections_ok", r.g0.ok()}};
  j["consistent"] = r.consistent;
  j["diagnostics_ok"] = r.diagnostics_ok;
  j["T_abstract"] = to_json(r.t_abstract);
  j["T_characters"] = to_json(r.t_characters);
  j["g0_proper"] = r.g0.proper;
  return j;
}

Json complex_json(const FqComplex& c, const std::vector<std::size_t>& homology, bool brown_ok) {
  Json j;
  j["dims_by_degree"] = c.dims;
  j["homology_dims"] = homology;
  j["euler"] = euler_characteristic(c.dims);
  j["brown_ok"] = brown_ok;
  return j;
}

}  // namespace endotriv
