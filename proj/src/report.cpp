#include "sncdp/report.hpp"

namespace sncdp {

namespace {

Json kclass_list(const std::vector<KClass>& ks) {
  Json out = Json::array();
  for (const auto& k : ks) out.push_back(k.to_string());
  return out;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Json report_header(const std::string& command, Json inputs) {
  Json r;
  r["schema"] = 1;
  r["engine_version"] = kEngineVersion;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  return r;
}

Evaluation evaluate(const SetupDocument& doc) {
  const FamilySetup& f = doc.family;
  GwResult gw = local_gw_genus0_detailed(f);

  Evaluation ev;
  Json& res = ev.results;
  res["setup"] = f.name;
  res["curve_class"] = f.curve_class_label;
  res["surface"] = f.surface.to_string();
  res["moduli"] = f.moduli.label;
  res["genus"] = 0;
  res["N0"] = to_string(gw.value);

  Json& chk = ev.checks;
  chk["setup_consistent"] = "pass";
  chk["surface_local_snc_del_pezzo"] = "pass";
  chk["virtual_rank_zero"] = verdict(gw.virtual_rank == 0);
  chk["chern_class_integral"] = "pass";

  std::vector<KClass> trivial;
  for (int s = 0; s < f.surface.rank(); ++s) {
    trivial.push_back(KClass::trivial(f.surface.components[s].variety.ring, 1));
  }
  KClass o_on_d = f.divisor ? KClass::trivial(f.divisor->ring, 1) : KClass::zero(f.moduli.ring);
  KClass chi_o = family_index_bundle(f, trivial, o_on_d);
  chk["structure_sheaf_index_one"] = verdict(chi_o == KClass::trivial(f.moduli.ring, 1));

  std::optional<KClass> dualizing;
  try {
    dualizing = dualizing_index(f);
    Rational alt = local_gw_genus0_via_dualizing(f);
    chk["dualizing_route"] = verdict(alt == gw.value);
  } catch (const DomainError&) {
    chk["dualizing_route"] = "not applicable";
  }

  if (doc.sheaf_moduli) {
    const SheafModuli& sm = *doc.sheaf_moduli;
    GVTable table = gv_table(sm);
    res["n0"] = table.n0.str();
    Json gv = Json::array();
    gv.push_back(table.n0.str());
    for (const auto& n : table.higher) gv.push_back(n.str());
    res["gv"] = std::move(gv);
    if (doc.primitive) {
      MultipleCoverReport mc = multiple_cover_check(gw.value, table, true);
      res["multiple_cover"] = verdict(mc.pass);
    } else {
      res["multiple_cover"] = "not checked: class not primitive";
    }
    res["polarization"] = sm.polarization;
    res["assumptions"] = Json::array({"GV invariants taken independent of the polarization"});
  }

  Json& in = ev.intermediates;
  Json sheaves = Json::array();
  for (int s = 0; s < f.surface.rank(); ++s) sheaves.push_back(sheaf_character(f, s).to_string());
  in["sheaf_characters"] = std::move(sheaves);
  in["e_dual_index"] = {{"components", kclass_list(gw.e_dual_index.component_terms)},
                        {"divisor", gw.e_dual_index.divisor_term ? gw.e_dual_index.divisor_term->to_string() : "0"},
                        {"total", gw.e_dual_index.total.to_string()}};
  in["tangent_index"] = {{"components", kclass_list(gw.tangent_index.twisted_terms)},
                         {"node", gw.tangent_index.node_term ? gw.tangent_index.node_term->to_string() : "0"},
                         {"total", gw.tangent_index.total.to_string()}};
  in["difference"] = gw.difference.to_string();
  in["virtual_rank"] = gw.virtual_rank.str();
  in["chern_class"] = gw.chern_class.to_string();
  in["moduli_chern_class"] = gw.moduli_chern_class.to_string();
  in["product"] = (gw.chern_class * gw.moduli_chern_class).to_string();
  in["structure_sheaf_index"] = chi_o.to_string();
  if (dualizing) in["dualizing_index"] = dualizing->to_string();
  return ev;
}

Json classification_results(const Classification& c) {
  Json res;
  Json configs = Json::array();
  for (const auto& cfg : c.configurations) {
    Json comps = Json::array();
    for (const auto& comp : cfg.components) {
      Json curves = Json::array();
      for (const auto& curve : comp.boundary_curves) {
        curves.push_back({{"class", curve.to_string()}, {"self_intersection", curve.self_intersection}});
      }
      comps.push_back({{"type", comp.type.to_string()}, {"boundary", std::move(curves)}});
    }
    Json glue = Json::array();
    for (const auto& g : cfg.gluings) glue.push_back({g.component_i, g.curve_i, g.component_j, g.curve_j});
    configs.push_back({{"description", cfg.to_string()}, {"components", std::move(comps)}, {"gluings", std::move(glue)}});
  }
  res["count"] = c.configurations.size();
  res["configurations"] = std::move(configs);
  res["complete"] = c.complete;
  res["completeness_note"] = c.completeness_note;
  return res;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace sncdp
