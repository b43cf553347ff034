#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetperc/clusters.hpp"
#include "hetperc/fit.hpp"
#include "json_report.hpp"

namespace hetperc::cli {

/// Fewer realizations than this per grid point cannot support a verdict.
inline constexpr std::size_t kMinReproduceRealizations = 50;

struct ReproduceOptions {
  std::string figure;  ///< "fig2" (out-clusters) or "figstr" (strongly connected)
  std::size_t realizations = 120;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::vector<std::uint32_t> sizes{75, 100};
};

struct ReproduceOutcome {
  ClusterMode mode = ClusterMode::out;
  double lo = 0.0, hi = 0.0;  ///< accepted interval for p_c
  std::optional<FitResult> fit;
  std::string fit_error;
  /// Same data fitted on the run holding the global sd maximum.
  std::optional<FitResult> peak_fit;
  std::string peak_fit_error;
  std::size_t max_second_largest_str = 0;
  bool singleton_check = true;  ///< figstr: all non-largest strong clusters are single vertices
  std::string status;           ///< "pass", "fail" or "insufficient statistics"
  std::string curves_csv;
  Json report;
};

ReproduceOutcome reproduce(const ReproduceOptions& options);

}  // namespace hetperc::cli
