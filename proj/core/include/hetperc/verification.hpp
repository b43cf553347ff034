#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hetperc/bounds.hpp"
#include "hetperc/corpus.hpp"
#include "hetperc/oracle.hpp"

namespace hetperc {

inline constexpr double kSoundnessTolerance = 1e-9;

/// Outcome of comparing one bound record with exact values on one instance.
struct RecordCheck {
  std::string id;
  bool applicable = false;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  /// Largest exact / bound ratio seen (<= 1 when sound); 0 with no comparisons.
  double worst_ratio = 0.0;
  std::string worst_detail;
};

/// Checks every record of `report` against the matching exact quantity:
/// chi_out/chi_in per vertex, q-means of chi_out, directed tau per pair,
/// undirected tau, and chi_SAC per arc. Threshold certificates are checked
/// for internal consistency (1/rho(H) is at least both inverse norms).
std::vector<RecordCheck> check_report(const BoundReport& report, const ExactObservables& exact,
                                      double tolerance = kSoundnessTolerance);

/// All unordered vertex pairs u < v.
std::vector<std::pair<VertexId, VertexId>> all_pairs(std::size_t n);

struct BoundTally {
  std::string id;
  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;
  std::string worst_instance;
};

struct SoundnessSummary {
  std::size_t instances = 0;
  std::vector<BoundTally> bounds;
  std::size_t total_violations() const;
};

/// Runs analyze + exact_observables on each instance and aggregates per bound id
/// in first-seen order.
SoundnessSummary soundness_suite(const std::vector<CorpusInstance>& corpus,
                                 double tolerance = kSoundnessTolerance);

}  // namespace hetperc
