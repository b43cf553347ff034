#include "reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "format.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/montecarlo.hpp"
#include "hetperc/rng.hpp"

namespace hetperc::cli {

namespace {

constexpr std::uint32_t kD1 = 3;
constexpr std::uint32_t kD2 = 2;

std::vector<double> reproduce_grid() {
  std::vector<double> grid;
  for (int i = 30; i <= 60; ++i) grid.push_back(i / 100.0);
  return grid;
}

}  // namespace

ReproduceOutcome reproduce(const ReproduceOptions& options) {
  ReproduceOutcome r;
  if (options.figure == "fig2") {
    r.mode = ClusterMode::out;
    r.lo = 0.326;
    r.hi = 0.366;
  } else if (options.figure == "figstr") {
    r.mode = ClusterMode::str;
    r.lo = 0.510;
    r.hi = 0.550;
  } else {
    throw std::invalid_argument("unknown figure '" + options.figure + "' (expected fig2 or figstr)");
  }
  if (options.realizations < 2) throw std::invalid_argument("reproduce needs at least 2 realizations");

  std::ostringstream csv;
  csv << "L,p,mode,mean,se,sd,max_second_largest_str\n";
  std::vector<SweepCurve> curves;
  Json sizes = Json::array();
  for (std::uint32_t L : options.sizes) {
    const Digraph d = two_region(L, kD1, kD2, options.seed);
    SweepSpec spec;
    spec.grid = reproduce_grid();
    spec.realizations = options.realizations;
    spec.seed = options.seed;
    spec.modes = {r.mode};
    spec.workers = options.workers;
    const SweepResult sweep_result = sweep(d, spec);
    const auto m = static_cast<std::size_t>(r.mode);
    for (const SweepPoint& pt : sweep_result.points) {
      csv << L << ',' << format_double(pt.p) << ',' << to_string(r.mode) << ','
          << format_double(pt.largest[m].mean) << ',' << format_double(pt.largest[m].se) << ','
          << format_double(pt.largest[m].sd) << ',';
      if (r.mode == ClusterMode::str) {
        csv << pt.max_second_largest_str;
        r.max_second_largest_str = std::max(r.max_second_largest_str, pt.max_second_largest_str);
      }
      csv << '\n';
    }
    curves.push_back(curve_from_sweep(sweep_result, r.mode, L));
    sizes.push_back({{"L", L}, {"vertices", d.vertex_count()}, {"arcs", d.arc_count()}});
  }
  r.curves_csv = csv.str();
  if (r.mode == ClusterMode::str) r.singleton_check = r.max_second_largest_str <= 1;

  try {
    r.fit = fit_threshold(curves, sd_fraction_window(0.5, RunChoice::lowest));
  } catch (const FitError& e) {
    r.fit_error = e.what();
  }
  try {
    r.peak_fit = fit_threshold(curves, sd_fraction_window(0.5, RunChoice::peak));
  } catch (const FitError& e) {
    r.peak_fit_error = e.what();
  }

  if (options.realizations < kMinReproduceRealizations) {
    r.status = "insufficient statistics";
  } else if (!r.fit) {
    r.status = "fail";
  } else {
    const double pc = r.fit->primary.p_c;
    r.status = pc >= r.lo && pc <= r.hi && r.singleton_check ? "pass" : "fail";
  }

  Json j;
  j["figure"] = options.figure;
  j["graph"] = {{"family", "two-region"}, {"d1", kD1}, {"d2", kD2}, {"sizes", sizes}};
  j["mode"] = to_string(r.mode);
  j["realizations"] = options.realizations;
  j["seed"] = options.seed;
  j["rng_scheme"] = CounterRng::kScheme;
  j["grid"] = reproduce_grid();
  j["expected_interval"] = {r.lo, r.hi};
  j["fit"] = r.fit ? fit_result_json(*r.fit) : Json(nullptr);
  if (!r.fit) j["fit_error"] = r.fit_error;
  j["p_c"] = r.fit ? Json(r.fit->primary.p_c) : Json(nullptr);
  j["peak_window_fit"] = r.peak_fit ? fit_result_json(*r.peak_fit) : Json(nullptr);
  if (!r.peak_fit) j["peak_window_fit_error"] = r.peak_fit_error;
  if (r.mode == ClusterMode::str) {
    j["max_second_largest_str"] = r.max_second_largest_str;
    j["non_largest_strong_clusters_are_singletons"] = r.singleton_check;
  }
  j["status"] = r.status;
  r.report = j;
  return r;
}

}  // namespace hetperc::cli
