// Acceptance checks for the library and the command line tool. Every
// criterion prints exactly one "criterion N: PASS|FAIL" line followed by
// indented detail lines. Run with --criterion N for a single check.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "app.hpp"
#include "hetperc/corpus.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/matrices.hpp"
#include "hetperc/montecarlo.hpp"
#include "hetperc/olg.hpp"
#include "hetperc/oracle.hpp"
#include "hetperc/spectral.hpp"
#include "hetperc/verification.hpp"

namespace fs = std::filesystem;
using namespace hetperc;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void require(bool ok, const std::string& line) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
};

std::string fmt(double x, int digits = 10) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

fs::path work_dir(const std::string& name) {
  const fs::path dir = fs::current_path() / "acceptance_work" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (code != 0) std::cerr << "hetperc " << args.front() << " exited " << code << ": " << err.str();
  return code;
}

SpectralOptions tight() {
  SpectralOptions o;
  o.tol = 1e-13;
  o.max_iter = 2'000'000;
  return o;
}

// ------------------------------------------------------------ 1 and 2

Outcome threshold_reproduction(const std::string& figure) {
  Outcome o;
  const fs::path dir = work_dir(figure);
  std::string text;
  const int code = run_cli({"reproduce", figure, "--realizations", "120", "--seed", "1",
                            "--out-dir", dir.string()},
                           &text);
  o.require(code == 0, "reproduce " + figure + " exit code " + std::to_string(code));
  if (code != 0) return o;
  const auto j = nlohmann::json::parse(slurp(dir / (figure + "_fit.json")));
  const double lo = j["expected_interval"][0].get<double>();
  const double hi = j["expected_interval"][1].get<double>();
  if (j["p_c"].is_null()) {
    o.require(false, "no threshold estimate: " + j.value("fit_error", std::string("?")));
    return o;
  }
  const double pc = j["p_c"].get<double>();
  const auto& fit = j["fit"];
  o.require(pc >= lo && pc <= hi, "extrapolated p_c = " + fmt(pc, 6) + " +- " +
                                      fmt(fit["extrapolation"]["p_c_se"].get<double>(), 3) + " in [" +
                                      fmt(lo) + ", " + fmt(hi) + "]");
  for (const auto& s : fit["sizes"]) {
    o.note("L = " + fmt(s["L"].get<double>()) + ": p(L) = " +
           fmt(s["p_L"].get<double>(), 6) + ", window [" +
           fmt(s["window"][0].get<double>(), 3) + ", " + fmt(s["window"][1].get<double>(), 3) +
           "]");
  }
  o.note("1/L^2 extrapolation gives " + fmt(fit["extrapolation_alternative"]["p_c"].get<double>(), 6));
  if (figure == "figstr") {
    const auto second = j["max_second_largest_str"].get<std::size_t>();
    o.require(second <= 1, "largest non-maximal strongly connected cluster over all samples = " +
                               std::to_string(second));
  }
  return o;
}

// ------------------------------------------------------------------- 3

Outcome two_region_spectrum() {
  Outcome o;
  const Digraph d = two_region(20, 3, 2, 1);
  const PerronResult a = spectral_radius(adjacency_matrix(d), tight());
  const PerronResult h = spectral_radius(hashimoto_matrix(d), tight());
  const double expected = 1.0 + std::sqrt(2.0);
  o.require(a.converged && std::abs(a.rho - expected) <= 1e-4 * expected,
            "rho(A) = " + fmt(a.rho, 12) + " vs 1 + sqrt(2) = " + fmt(expected, 12));
  o.require(h.converged && std::abs(a.rho - h.rho) <= 1e-6,
            "|rho(A) - rho(H)| = " + fmt(std::abs(a.rho - h.rho), 3));

  const Digraph reg = two_region(20, 3, 3, 1);
  const PerronResult r = spectral_radius(adjacency_matrix(reg), tight());
  o.require(r.converged && std::abs(r.gamma_L.value - 1.0) <= 1e-8 &&
                std::abs(r.gamma_R.value - 1.0) <= 1e-8,
            "d1 = d2 = 3: gamma_L(A) = " + fmt(r.gamma_L.value, 15) +
                ", gamma_R(A) = " + fmt(r.gamma_R.value, 15));
  return o;
}

// ------------------------------------------------------------------- 4

Outcome ordering_suite() {
  Outcome o;
  const std::vector<CorpusInstance> corpus = spectral_corpus(2024, 240, 40);
  std::size_t line_bad = 0, order_bad = 0, equal_bad = 0, gap_bad = 0, unconverged = 0;
  std::size_t oriented = 0, gapped = 0;
  double worst_line = 0, worst_equal = 0, min_gap = INFINITY;
  for (const CorpusInstance& inst : corpus) {
    const PerronResult a = spectral_radius(weighted_adjacency(inst.graph, inst.p), tight());
    const PerronResult l = spectral_radius(weighted_line_adjacency(inst.graph, inst.p), tight());
    const PerronResult h = spectral_radius(weighted_hashimoto(inst.graph, inst.p), tight());
    if (!a.converged || !l.converged || !h.converged) ++unconverged;
    const double dl = std::abs(a.rho - l.rho);
    worst_line = std::max(worst_line, dl);
    if (dl > 1e-8) ++line_bad;
    if (h.rho > a.rho + 1e-8) ++order_bad;
    if (!inst.graph.has_symmetric_bonds()) {
      ++oriented;
      worst_equal = std::max(worst_equal, std::abs(a.rho - h.rho));
      if (std::abs(a.rho - h.rho) > 1e-8) ++equal_bad;
    } else if (olg_strongly_connected(inst.graph)) {
      ++gapped;
      min_gap = std::min(min_gap, a.rho - h.rho);
      if (!(a.rho - h.rho > 1e-8)) ++gap_bad;
    }
  }
  o.note(std::to_string(corpus.size()) + " instances, " + std::to_string(oriented) +
         " without symmetric bonds, " + std::to_string(gapped) +
         " with symmetric bonds and a strongly connected oriented line graph");
  o.require(corpus.size() >= 200, "corpus size");
  o.require(unconverged == 0, std::to_string(unconverged) + " unconverged power iterations");
  o.require(line_bad == 0, "|rho(A_p) - rho(L_p)| <= 1e-8, worst " + fmt(worst_line, 3));
  o.require(order_bad == 0, "rho(H_p) <= rho(A_p) + 1e-8, violations " + std::to_string(order_bad));
  o.require(oriented > 0 && equal_bad == 0,
            "equality without symmetric bonds, worst " + fmt(worst_equal, 3));
  o.require(gapped > 0 && gap_bad == 0, "strict gap > 1e-8, smallest " + fmt(min_gap, 3));
  return o;
}

// ------------------------------------------------------------------- 5

Outcome soundness() {
  Outcome o;
  const SoundnessSummary s = soundness_suite(oracle_corpus(1, 500, 12), 1e-9);
  o.require(s.instances >= 500, std::to_string(s.instances) + " instances");
  for (const BoundTally& t : s.bounds) {
    o.require(t.violations == 0,
              t.id + ": applicable " + std::to_string(t.applicable) + "/" +
                  std::to_string(t.instances) + ", comparisons " + std::to_string(t.comparisons) +
                  ", violations " + std::to_string(t.violations) + ", tightest ratio " +
                  fmt(t.worst_ratio, 4));
  }
  o.require(s.total_violations() == 0, "total violations " + std::to_string(s.total_violations()));
  return o;
}

// ------------------------------------------------------------------- 6

Outcome rooted_tree_checks() {
  Outcome o;
  for (auto [D, r] : {std::pair{2u, 2u}, std::pair{3u, 4u}, std::pair{5u, 6u}}) {
    const Digraph t = rooted_tree(D, r);
    const PerronResult h = spectral_radius(hashimoto_matrix(t), tight());
    const PerronResult a = spectral_radius(adjacency_matrix(t), tight());
    const double stated = 2.0 * std::sqrt(D) * std::cos(std::numbers::pi / (r + 1));
    const double levels = 2.0 * std::sqrt(D) * std::cos(std::numbers::pi / (r + 2));
    const std::string tag = "(D, r) = (" + std::to_string(D) + ", " + std::to_string(r) + ")";
    o.require(h.rho == 0.0, tag + ": rho(H) = " + fmt(h.rho));
    o.require(std::abs(a.rho - stated) <= 1e-6,
              tag + ": rho(A) = " + fmt(a.rho, 12) + " vs 2 sqrt(D) cos(pi/(r+1)) = " +
                  fmt(stated, 12) + " (2 sqrt(D) cos(pi/(r+2)) = " + fmt(levels, 12) + ")");
  }

  double worst = 0;
  std::size_t cases = 0;
  for (auto [D, r] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{3u, 2u},
                      std::pair{5u, 1u}, std::pair{12u, 1u}}) {
    const Digraph t = rooted_tree(D, r);
    if (t.vertex_count() > 13) continue;
    for (double p : {0.15, 0.4, 0.7, 0.95}) {
      const double pd = p * D;
      if (std::abs(pd - 1.0) < 1e-3) continue;
      const double formula = p * (std::pow(pd, r + 1) - 1.0) / (pd - 1.0);
      const ExactObservables ex =
          exact_observables(t, SiteProbabilities::homogeneous(t.vertex_count(), p));
      worst = std::max(worst, std::abs(ex.chi[0][0] - formula));
      ++cases;
    }
  }
  o.require(cases > 0 && worst <= 1e-10, "root susceptibility vs closed form over " +
                                             std::to_string(cases) + " cases, worst " +
                                             fmt(worst, 3));

  // At p = 1/rho(A) with D = 5 the root susceptibility grows like sqrt(n).
  for (std::uint32_t r = 2; r <= 6; ++r) {
    const Digraph t = rooted_tree(5, r);
    const std::size_t n = t.vertex_count();
    const double p = 1.0 / spectral_radius(adjacency_matrix(t), tight()).rho;
    const SiteProbabilities ps = SiteProbabilities::homogeneous(n, p);
    const double rho_p = spectral_radius(weighted_adjacency(t, ps), tight()).rho_upper;
    double chi0 = 0;
    for (std::size_t depth : distances_from(t, 0)) chi0 += std::pow(p, static_cast<double>(depth + 1));
    const double ratio = chi0 / std::sqrt(static_cast<double>(n));
    const double bound = rho_p < 1.0 ? 1.0 / (1.0 - rho_p) : INFINITY;
    o.require(ratio <= bound, "D = 5, r = " + std::to_string(r) + ", n = " + std::to_string(n) +
                                  ": chi(0)/sqrt(n) = " + fmt(ratio, 6) +
                                  ", 1/(1 - rho(A_p)) = " + fmt(bound, 6));
  }
  return o;
}

// ------------------------------------------------------------------- 7

Outcome sac_expectation() {
  Outcome o;
  const std::vector<std::pair<std::string, Digraph>> graphs = {
      {"K4", complete(4)}, {"triangle", complete(3)}, {"two-region-4", two_region(4, 3, 2, 1)}};
  constexpr std::size_t kMaxLength = 8;
  for (const auto& [name, d] : graphs) {
    std::vector<std::uint32_t> arcs(d.arc_count());
    for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a] = static_cast<std::uint32_t>(a);
    WalkProfileOptions wopt;
    wopt.diagonal = arcs;
    wopt.starts = {0};
    const WalkProfile walks = walk_profile(hashimoto_matrix(d), kMaxLength, wopt);
    for (double p : {0.3, 0.6, 0.9}) {
      EstimateRequest req;
      req.arcs.assign(arcs.begin(), arcs.end());
      req.sac_length_cap = kMaxLength;
      req.realizations = 10000;
      req.seed = 7;
      const ObservableEstimates e =
          estimate_observables(d, SiteProbabilities::homogeneous(d.vertex_count(), p), req);
      std::size_t violations = 0, checks = 0;
      double worst_margin = INFINITY;
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        for (std::size_t s = 1; s <= kMaxLength; ++s) {
          const Estimate& est = e.sac_by_length[k][s];
          const double bound = std::pow(p, static_cast<double>(s)) * walks.diagonal[k][s - 1];
          const double margin = bound - (est.mean - 3.0 * est.se);
          if (bound > 0) worst_margin = std::min(worst_margin, margin);
          ++checks;
          if (margin < 0) ++violations;
        }
      }
      o.require(violations == 0, name + ", p = " + fmt(p) + ": " + std::to_string(checks) +
                                     " (arc, length) checks, smallest margin where the bound is positive " +
                                     fmt(worst_margin, 4));
    }
  }
  return o;
}

// ------------------------------------------------------------------- 8

Outcome tree_sequence() {
  Outcome o;
  const std::uint32_t d = 3;
  std::vector<double> b_values;
  for (std::uint32_t r : {4u, 6u, 8u, 10u}) {
    const double ra = spectral_radius(hashimoto_matrix(tree_closed(d, r, TreeVariant::a, 1)), tight()).rho;
    const double rb = spectral_radius(hashimoto_matrix(tree_closed(d, r, TreeVariant::b, 1)), tight()).rho;
    const double rc = spectral_radius(hashimoto_matrix(tree_closed(d, r, TreeVariant::c, 1)), tight()).rho;
    b_values.push_back(rb);
    const std::string tag = "r = " + std::to_string(r);
    o.require(ra == 0.0, tag + ": variant a rho(H) = " + fmt(ra));
    o.require(std::abs(rc - 2.0) <= 1e-8, tag + ": variant c rho(H) = " + fmt(rc, 12));
    o.note(tag + ": variant b rho(H) = " + fmt(rb, 8));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < b_values.size(); ++i) monotone = monotone && b_values[i] > b_values[i - 1];
  o.require(monotone, "variant b rho(H) increasing in r");
  o.require(std::abs(b_values.back() - std::sqrt(2.0)) <= 0.05,
            "variant b at r = 10: |rho(H) - sqrt(2)| = " + fmt(std::abs(b_values.back() - std::sqrt(2.0)), 4));
  return o;
}

// ------------------------------------------------------------------- 9

Outcome monte_carlo_vs_oracle() {
  Outcome o;
  constexpr std::size_t kRealizations = 20000;
  const double se_floor = 1.0 / static_cast<double>(kRealizations);
  const std::vector<CorpusInstance> corpus = oracle_corpus(99, 24, 12);
  std::size_t total_checks = 0, total_bad = 0;
  double worst_z = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusInstance& inst = corpus[i];
    const Digraph& d = inst.graph;
    const std::size_t n = d.vertex_count();
    EstimateRequest req;
    for (VertexId v = 0; v < n; ++v) req.probes.push_back(v);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u != v) req.pairs.emplace_back(u, v);
      }
    }
    for (ArcId a = 0; a < d.arc_count(); ++a) req.arcs.push_back(a);
    req.sac_length_cap = n;
    req.realizations = kRealizations;
    req.seed = 1000 + i;
    const ObservableEstimates e = estimate_observables(d, inst.p, req);
    const ExactObservables ex = exact_observables(d, inst.p);

    std::size_t checks = 0, bad = 0;
    double inst_worst = 0;
    std::string worst_what;
    auto compare = [&](const Estimate& est, double exact, const std::string& what) {
      const double z = std::abs(est.mean - exact) / std::max(est.se, se_floor);
      ++checks;
      if (z > inst_worst) {
        inst_worst = z;
        worst_what = what;
      }
      if (z > 4.0) ++bad;
    };
    for (int k = 0; k < 4; ++k) {
      for (VertexId v = 0; v < n; ++v) {
        compare(e.chi[k][v], ex.chi[k][v], std::string("chi_") + to_string(kAllModes[k]));
      }
    }
    for (std::size_t q = 0; q < req.pairs.size(); ++q) {
      const auto [u, v] = req.pairs[q];
      compare(e.tau_out[q], ex.tau(ClusterMode::out, u, v), "tau_out");
      compare(e.tau_str[q], ex.tau(ClusterMode::str, u, v), "tau_str");
      compare(e.tau_und[q], ex.tau(ClusterMode::und, u, v), "tau_und");
    }
    for (std::size_t k = 0; k < req.arcs.size(); ++k) compare(e.sac_total[k], ex.chi_sac[k], "sac");
    total_checks += checks;
    total_bad += bad;
    worst_z = std::max(worst_z, inst_worst);
    o.require(bad == 0, inst.name + " (n = " + std::to_string(n) + "): " + std::to_string(checks) +
                            " comparisons, largest |z| = " + fmt(inst_worst, 3) + " (" +
                            worst_what + ")");
  }
  o.note(std::to_string(total_checks) + " comparisons in total, " + std::to_string(total_bad) +
         " beyond 4 SE, largest |z| = " + fmt(worst_z, 3));
  return o;
}

// ------------------------------------------------------------------ 10

// Manifest text with the timestamp line removed.
std::string manifest_without_timestamp(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") == std::string::npos) kept += line + "\n";
  }
  return kept;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = work_dir("determinism");
  const std::string graph = (dir / "graph.txt").string();
  if (run_cli({"generate", "two-region", "--L", "6", "--d1", "3", "--d2", "2", "--seed", "5", "-o", graph}) != 0) {
    o.require(false, "could not generate the input graph");
    return o;
  }

  struct Case {
    std::string name;
    std::function<std::vector<std::string>(const std::string& out, const std::string& workers)> args;
    std::vector<std::string> outputs;  // file names relative to the run directory
  };
  const std::vector<Case> cases = {
      {"generate",
       [&](const std::string& out, const std::string&) {
         return std::vector<std::string>{"generate", "tree-closed", "--d", "3", "--r", "5",
                                         "--variant", "b", "--seed", "9", "-o", out + "/g.txt"};
       },
       {"g.txt", "g.txt.manifest.json"}},
      {"analyze",
       [&](const std::string& out, const std::string&) {
         return std::vector<std::string>{"analyze", graph, "--p", "0.3", "-o", out + "/a.json"};
       },
       {"a.json", "a.json.manifest.json"}},
      {"simulate",
       [&](const std::string& out, const std::string& w) {
         return std::vector<std::string>{"simulate", graph, "--grid", "0.3:0.7:0.1",
                                         "--realizations", "60", "--modes", "und,out,in,str",
                                         "--probes", "0,7,30", "--workers", w,
                                         "-o", out + "/s.csv"};
       },
       {"s.csv", "s.csv.probes.csv", "s.csv.manifest.json"}},
      {"fit",
       [&](const std::string& out, const std::string&) {
         return std::vector<std::string>{"fit", "--curve", "6=" + (dir / "c6.csv").string(),
                                         "--curve", "10=" + (dir / "c10.csv").string(),
                                         "--mode", "out", "-o", out + "/f.json"};
       },
       {"f.json", "f.json.manifest.json"}},
      {"verify",
       [&](const std::string& out, const std::string&) {
         return std::vector<std::string>{"verify", "--instances", "40", "--max-n", "9",
                                         "-o", out + "/v.json"};
       },
       {"v.json", "v.json.manifest.json"}},
      {"reproduce",
       [&](const std::string& out, const std::string& w) {
         return std::vector<std::string>{"reproduce", "fig2", "--realizations", "50",
                                         "--workers", w, "--out-dir", out};
       },
       {"fig2_curves.csv", "fig2_fit.json", "fig2_curves.csv.manifest.json",
        "fig2_fit.json.manifest.json"}},
  };

  // Inputs for the fit case: two sweeps on differently sized graphs.
  for (const std::string L : {"6", "10"}) {
    const std::string g = (dir / ("g" + L + ".txt")).string();
    run_cli({"generate", "two-region", "--L", L, "--d1", "3", "--d2", "2", "-o", g});
    run_cli({"simulate", g, "--grid", "0.2:0.8:0.02", "--realizations", "60", "--modes", "out",
             "-o", (dir / ("c" + L + ".csv")).string()});
  }

  for (const Case& c : cases) {
    std::vector<fs::path> runs;
    bool ran = true;
    for (const std::string w : {"1", "8"}) {
      for (int rep = 0; rep < 2; ++rep) {
        // Every run writes to the same path, since manifests record output
        // paths, and is then moved aside for comparison.
        const fs::path scratch = dir / "run";
        const fs::path kept = dir / (c.name + "_w" + w + "_" + std::to_string(rep));
        fs::create_directories(scratch);
        std::string text;
        if (run_cli(c.args(scratch.string(), w), &text) != 0) ran = false;
        std::ofstream(scratch / "stdout.txt", std::ios::binary) << text;
        fs::rename(scratch, kept);
        runs.push_back(kept);
      }
    }
    if (!ran) {
      o.require(false, c.name + ": command failed");
      continue;
    }
    std::vector<std::string> mismatches;
    for (std::size_t k = 1; k < runs.size(); ++k) {
      // Reruns with identical options (same worker count) must agree in every
      // file except the manifest timestamp; across worker counts the data
      // files must still agree byte for byte.
      const bool same_workers = k % 2 == 1;
      const fs::path& ref = runs[same_workers ? k - 1 : 0];
      for (const std::string& f : c.outputs) {
        const bool manifest = f.ends_with(".manifest.json");
        if (!fs::exists(runs[k] / f)) {
          mismatches.push_back(f + " missing");
          continue;
        }
        if (manifest && !same_workers) continue;
        const bool equal = manifest ? manifest_without_timestamp(ref / f) ==
                                          manifest_without_timestamp(runs[k] / f)
                                    : slurp(ref / f) == slurp(runs[k] / f);
        if (!equal) mismatches.push_back(f + " differs in " + runs[k].filename().string());
      }
      if (slurp(ref / "stdout.txt") != slurp(runs[k] / "stdout.txt")) {
        mismatches.push_back("stdout differs in " + runs[k].filename().string());
      }
    }
    std::string detail = c.name + ": " + std::to_string(c.outputs.size()) + " files x 4 runs";
    for (const std::string& m : mismatches) detail += "; " + m;
    o.require(mismatches.empty(), detail);
  }
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "out-cluster threshold on two-region digraphs", [] { return threshold_reproduction("fig2"); }},
      {2, "strong-cluster threshold and singleton side clusters",
       [] { return threshold_reproduction("figstr"); }},
      {3, "two-region spectral identity", two_region_spectrum},
      {4, "ordering of rho(A_p), rho(L_p), rho(H_p)", ordering_suite},
      {5, "bound soundness against exact enumeration", soundness},
      {6, "rooted tree closed forms", rooted_tree_checks},
      {7, "SAC counts below weighted non-backtracking returns", sac_expectation},
      {8, "tree-sequence limits of rho(H)", tree_sequence},
      {9, "Monte Carlo agrees with exact enumeration", monte_carlo_vs_oracle},
      {10, "byte-identical reruns at 1 and 8 workers", determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (only != 0 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::cerr << "criterion must be between 1 and " << criteria.size() << "\n";
    return 2;
  }

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.number << ": " << (outcome.pass ? "PASS" : "FAIL") << "  "
              << c.title << "\n";
    for (const std::string& line : outcome.details) std::cout << "    " << line << "\n";
    std::cout.flush();
    all = all && outcome.pass;
  }
  return all ? 0 : 1;
}
