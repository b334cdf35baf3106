#include "heaptl/report.hpp"

namespace heaptl {

namespace {

nlohmann::json one_based(const std::vector<int>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (int x : xs) out.push_back(x + 1);
  return out;
}

}  // namespace

nlohmann::json graph_json(const CoxeterGraph& g) {
  nlohmann::json bonds = nlohmann::json::array();
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t) {
      int m = g.bond(s, t);
      if (m < 3) continue;
      nlohmann::json bond;
      bond["s"] = s + 1;
      bond["t"] = t + 1;
      if (m == infinite_bond)
        bond["m"] = "inf";
      else
        bond["m"] = m;
      bonds.push_back(bond);
    }
  return nlohmann::json{{"rank", g.rank()}, {"bonds", bonds}};
}

nlohmann::json heap_report_json(const Heap& e) {
  BoundaryComplex c(e);
  nlohmann::json report;
  report["schema"] = 1;
  report["word"] = one_based(e.canonical_word());
  report["size"] = e.size();
  report["labels"] = one_based(e.labels());
  report["fully_commutative"] = e.is_fc();

  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : e.cover_pairs()) covers.push_back({a + 1, b + 1});
  report["covers"] = covers;

  nlohmann::json edges = nlohmann::json::array();
  for (size_t k = 0; k < c.edges().size(); ++k) {
    nlohmann::json edge;
    edge["lo"] = c.edges()[k].lo + 1;
    edge["hi"] = c.edges()[k].hi + 1;
    edge["label"] = e.label(c.edges()[k].lo) + 1;
    edge["boundary"] = one_based(c.columns()[k]);
    edges.push_back(edge);
  }
  report["edges"] = edges;

  report["kernel_dim"] = c.kernel_dim();
  report["image_dim"] = c.image_dim();
  report["acyclic"] = c.is_acyclic();
  report["strongly_acyclic"] = is_strongly_acyclic(e);
  report["boundary_vertices"] = one_based(c.boundary_vertices());
  report["effective_boundary_vertices"] = one_based(c.effective_boundary_vertices());

  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.linear_equivalence_classes()) classes.push_back(one_based(cls));
  report["equivalence_classes"] = classes;

  report["dismantlable"] = e.is_dismantlable();
  report["property_p2"] = e.has_property_p2();

  if (e.is_fc()) {
    auto verdict = c.verify_main_theorem();
    nlohmann::json v;
    v["holds"] = verdict.holds;
    if (!verdict.holds) v["violation"] = verdict.violation + 1;
    report["boundary_effective_equivalence"] = v;
    report["left_descents"] = one_based(e.left_descents());
    report["right_descents"] = one_based(e.right_descents());
  }
  return report;
}

nlohmann::json campaign_report_json(const CoxeterGraph& g, const CampaignConfig& cfg,
                                    const CampaignResult& result) {
  nlohmann::json report;
  report["schema"] = 1;
  report["graph"] = graph_json(g);
  report["max_len"] = cfg.max_len;
  report["checks"] = cfg.checks;
  report["elements"] = result.elements;
  report["elements_by_length"] = result.by_length;
  report["assertions"] = result.assertions;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : result.violations) {
    nlohmann::json item;
    item["check"] = v.check;
    item["element"] = word_str(v.element);
    item["detail"] = v.detail;
    violations.push_back(item);
  }
  report["violations"] = violations;
  return report;
}

}  // namespace heaptl
