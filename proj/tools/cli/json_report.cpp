#include "json_report.hpp"

#include <cmath>

namespace hetperc::cli {

namespace {

// nlohmann writes non-finite doubles as null; +inf height ratios are kept
// readable through a separate flag instead.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

}  // namespace

Json perron_json(const PerronResult& pr) {
  Json j;
  j["rho"] = pr.rho;
  j["rho_lower"] = pr.rho_lower;
  j["rho_upper"] = pr.rho_upper;
  j["converged"] = pr.converged;
  j["irreducible"] = pr.irreducible;
  j["iterations"] = pr.iterations;
  j["residual"] = number(pr.residual);
  j["gamma_R"] = number(pr.gamma_R.value);
  j["gamma_R_infinite"] = std::isinf(pr.gamma_R.value);
  j["gamma_L"] = number(pr.gamma_L.value);
  j["gamma_L_infinite"] = std::isinf(pr.gamma_L.value);
  return j;
}

Json bound_report_json(const BoundReport& report) {
  Json j;
  j["vertex_count"] = report.vertex_count;
  j["arc_count"] = report.arc_count;
  j["strictly_interior"] = report.strictly_interior;
  const AnalysisContext& ctx = report.context;
  j["spectral"] = {{"A_p", perron_json(ctx.perron_a)}, {"H_p", perron_json(ctx.perron_h)}};
  j["rho_gap"] = ctx.perron_a.rho - ctx.perron_h.rho;

  Json olg;
  olg["digraph_strongly_connected"] = report.olg.digraph_strongly_connected;
  olg["olg_strongly_connected"] = report.olg.olg_strongly_connected;
  olg["condition"] = to_string(report.olg.condition);
  olg["return_cap"] = report.olg.return_cap;
  Json lengths = Json::array();
  for (const auto& len : report.olg.return_length) lengths.push_back(len ? Json(*len) : Json(nullptr));
  olg["return_length"] = lengths;
  j["olg"] = olg;

  const ReturnProbability& rp = report.return_probability;
  j["return_probability"] = {{"applicable", rp.applicable},     {"reason", rp.reason},
                             {"lambda", number(rp.lambda)},     {"depth_cap", rp.depth_cap},
                             {"p_min", number(rp.p_min)},       {"per_vertex", numbers(rp.per_vertex)}};

  Json records = Json::array();
  for (const BoundRecord& r : report.records) {
    Json rec;
    rec["id"] = r.id;
    rec["formula"] = r.formula;
    rec["applicable"] = r.applicable;
    rec["reason"] = r.applicable ? Json(nullptr) : Json(r.reason);
    rec["value"] = optional_number(r.value);
    rec["vacuous"] = r.vacuous;
    Json inputs = Json::object();
    for (const auto& [name, value] : r.inputs) inputs[name] = number(value);
    rec["inputs"] = inputs;
    if (!r.per_vertex.empty()) rec["per_vertex"] = numbers(r.per_vertex);
    if (!r.pairs.empty()) {
      Json pairs = Json::array();
      for (const PairBound& b : r.pairs) {
        pairs.push_back({{"from", b.from},
                         {"to", b.to},
                         {"distance", b.distance ? Json(*b.distance) : Json(nullptr)},
                         {"value", number(b.value)},
                         {"unreachable", b.unreachable},
                         {"vacuous", b.vacuous}});
      }
      rec["pairs"] = pairs;
    }
    records.push_back(rec);
  }
  j["bounds"] = records;

  const UniquenessReport& u = report.uniqueness;
  j["uniqueness"] = {{"rho_H", u.rho_h},
                     {"sac_bounded", u.sac_bounded},
                     {"sac_bound", number(u.sac_bound)},
                     {"largest_cluster_fraction", optional_number(u.largest_cluster_fraction)},
                     {"large_cluster_threshold", u.large_cluster_threshold},
                     {"flagged_non_unique", u.flagged_non_unique},
                     {"regime", u.regime}};
  return j;
}

Json fit_result_json(const FitResult& fit) {
  Json j;
  j["window_rule"] = fit.window_rule;
  Json sizes = Json::array();
  for (const SizeFit& s : fit.sizes) {
    sizes.push_back({{"L", s.L},
                     {"window", {s.window_p_lo, s.window_p_hi}},
                     {"window_points", s.window_points},
                     {"slope", s.slope},
                     {"slope_se", s.slope_se},
                     {"intercept", s.intercept},
                     {"p_L", s.p_intercept},
                     {"p_L_se", s.p_intercept_se}});
  }
  j["sizes"] = sizes;
  auto extrap = [](const Extrapolation& e) {
    return Json{{"variable", e.variable}, {"p_c", e.p_c}, {"p_c_se", e.p_c_se}, {"slope", e.slope}};
  };
  j["extrapolation"] = extrap(fit.primary);
  j["extrapolation_alternative"] = extrap(fit.alternative);
  j["sensitivity_1_over_L_vs_L2"] = fit.sensitivity;
  return j;
}

Json soundness_json(const SoundnessSummary& summary) {
  Json j;
  j["instances"] = summary.instances;
  j["total_violations"] = summary.total_violations();
  Json rows = Json::array();
  for (const BoundTally& t : summary.bounds) {
    rows.push_back({{"id", t.id},
                    {"instances", t.instances},
                    {"applicable", t.applicable},
                    {"comparisons", t.comparisons},
                    {"violations", t.violations},
                    {"worst_ratio", number(t.worst_ratio)},
                    {"worst_instance", t.worst_instance}});
  }
  j["bounds"] = rows;
  return j;
}

}  // namespace hetperc::cli
