#include "hetperc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hetperc/corpus.hpp"

namespace hetperc {

namespace {

class Checker {
 public:
  Checker(RecordCheck& rc, double tol) : rc_(rc), tol_(tol) {}

  void compare(double exact, double bound, const std::string& what) {
    ++rc_.comparisons;
    if (exact > bound + tol_) ++rc_.violations;
    const double ratio = bound > 0 ? exact / bound : (exact > tol_ ? std::numeric_limits<double>::infinity() : 0.0);
    if (ratio > rc_.worst_ratio || rc_.worst_detail.empty()) {
      rc_.worst_ratio = std::max(rc_.worst_ratio, ratio);
      rc_.worst_detail = what + ": exact " + std::to_string(exact) + " vs bound " +
                         std::to_string(bound);
    }
  }

 private:
  RecordCheck& rc_;
  double tol_;
};

double mean_power(const std::vector<double>& chi, double q) {
  double s = 0.0;
  for (double c : chi) s += std::pow(c, q);
  return s / static_cast<double>(chi.size());
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> all_pairs(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

std::vector<RecordCheck> check_report(const BoundReport& report, const ExactObservables& exact,
                                      double tolerance) {
  const std::size_t n = exact.n;
  const auto& chi_out = exact.chi[static_cast<std::size_t>(ClusterMode::out)];
  const auto& chi_in = exact.chi[static_cast<std::size_t>(ClusterMode::in)];
  const auto& chi_und = exact.chi[static_cast<std::size_t>(ClusterMode::und)];

  std::vector<RecordCheck> out;
  for (const BoundRecord& r : report.records) {
    RecordCheck rc;
    rc.id = r.id;
    rc.applicable = r.applicable;
    if (!r.applicable) {
      out.push_back(std::move(rc));
      continue;
    }
    Checker check(rc, tolerance);
    const std::string& id = r.id;
    const bool is_in = id.rfind("chi_in", 0) == 0;
    if (id == "chi_out_adjacency" || id == "chi_in_adjacency" || id == "chi_out_hashimoto" ||
        id == "chi_in_hashimoto" || id == "chi_in_norm1" || id == "chi_out_norminf") {
      const auto& chi = is_in ? chi_in : chi_out;
      for (std::size_t v = 0; v < n; ++v) {
        check.compare(chi[v], r.per_vertex[v], "vertex " + std::to_string(v));
      }
    } else if (id == "chi_out_qnorm_1") {
      check.compare(mean_power(chi_out, 1.0), *r.value, "mean chi_out");
    } else if (id == "chi_out_qnorm_2") {
      check.compare(mean_power(chi_out, 2.0), *r.value, "mean chi_out^2");
    } else if (id == "chi_out_qnorm_inf") {
      check.compare(*std::max_element(chi_out.begin(), chi_out.end()), *r.value, "max chi_out");
    } else if (id == "chi_undirected_sqrt_n") {
      for (std::size_t v = 0; v < n; ++v) {
        check.compare(chi_und[v], *r.value, "vertex " + std::to_string(v));
      }
    } else if (id == "tau_adjacency_pair" || id == "tau_adjacency_either" ||
               id == "tau_hashimoto_either") {
      for (const PairBound& b : r.pairs) {
        check.compare(exact.tau(ClusterMode::out, b.from, b.to), b.value,
                      "tau " + std::to_string(b.from) + "->" + std::to_string(b.to));
      }
    } else if (id == "tau_undirected_adjacency" || id == "tau_undirected_hashimoto") {
      for (const PairBound& b : r.pairs) {
        check.compare(exact.tau(ClusterMode::und, b.from, b.to), b.value,
                      "tau " + std::to_string(b.from) + "," + std::to_string(b.to));
      }
    } else if (id == "sac") {
      for (std::size_t a = 0; a < exact.chi_sac.size(); ++a) {
        check.compare(exact.chi_sac[a], *r.value, "arc " + std::to_string(a));
      }
    } else if (id == "threshold_certificates") {
      const double inv_rho = r.input("inv_rho_H");
      check.compare(r.input("inv_norm1_H"), inv_rho, "1/||H||_1 vs 1/rho(H)");
      check.compare(r.input("inv_norminf_H"), inv_rho, "1/||H||_inf vs 1/rho(H)");
    }
    out.push_back(std::move(rc));
  }
  return out;
}

std::size_t SoundnessSummary::total_violations() const {
  std::size_t v = 0;
  for (const BoundTally& b : bounds) v += b.violations;
  return v;
}

SoundnessSummary soundness_suite(const std::vector<CorpusInstance>& corpus, double tolerance) {
  SoundnessSummary summary;
  std::map<std::string, std::size_t> slot;
  for (const CorpusInstance& inst : corpus) {
    const auto pairs = all_pairs(inst.graph.vertex_count());
    const BoundReport report = analyze(inst.graph, inst.p, pairs);
    const ExactObservables exact = exact_observables(inst.graph, inst.p);
    ++summary.instances;
    for (const RecordCheck& rc : check_report(report, exact, tolerance)) {
      auto [it, inserted] = slot.emplace(rc.id, summary.bounds.size());
      if (inserted) {
        BoundTally fresh;
        fresh.id = rc.id;
        summary.bounds.push_back(std::move(fresh));
      }
      BoundTally& t = summary.bounds[it->second];
      ++t.instances;
      if (!rc.applicable) continue;
      ++t.applicable;
      t.comparisons += rc.comparisons;
      t.violations += rc.violations;
      if (rc.comparisons > 0 && (rc.worst_ratio > t.worst_ratio || t.worst_instance.empty())) {
        t.worst_ratio = std::max(t.worst_ratio, rc.worst_ratio);
        t.worst_instance = inst.name + " (" + rc.worst_detail + ")";
      }
    }
  }
  return summary;
}

}  // namespace hetperc
