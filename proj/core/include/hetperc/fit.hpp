#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetperc/clusters.hpp"
#include "hetperc/montecarlo.hpp"

namespace hetperc {

/// Raised when a curve cannot support a threshold fit.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest-cluster curve of one system size, ready for fitting.
struct SweepCurve {
  double L = 0.0;
  std::vector<double> p;
  std::vector<double> mean;
  std::vector<double> se;
  std::vector<double> sd;
};

SweepCurve curve_from_sweep(const SweepResult& sweep, ClusterMode mode, double L);

/// Index range [first, last] of the grid used for the linear fit.
struct FitWindow {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct WindowRule {
  std::string name;
  std::function<FitWindow(const SweepCurve&)> select;
};

/// Which maximal run of sd >= fraction * max(sd) to fit when there are several.
/// `lowest` takes the run at the smallest p, i.e. the first onset of large
/// fluctuations; `peak` takes the run holding the global sd maximum.
enum class RunChoice { lowest, peak };

/// Maximal contiguous grid run on which the sample standard deviation of the
/// largest-cluster size is at least `fraction` of its maximum over the grid.
WindowRule sd_fraction_window(double fraction = 0.5, RunChoice choice = RunChoice::lowest);

struct SizeFit {
  double L = 0.0;
  double window_p_lo = 0.0;
  double window_p_hi = 0.0;
  std::size_t window_points = 0;
  double slope = 0.0;
  double slope_se = 0.0;
  double intercept = 0.0;  ///< value of the line at p = 0
  double p_intercept = 0.0;  ///< pseudo-critical point p(L)
  double p_intercept_se = 0.0;
};

struct Extrapolation {
  std::string variable;  ///< "1/L" or "1/L^2"
  double p_c = 0.0;
  double p_c_se = 0.0;
  double slope = 0.0;
};

struct FitResult {
  std::string window_rule;
  std::vector<SizeFit> sizes;
  Extrapolation primary;      ///< against 1/L
  Extrapolation alternative;  ///< against 1/L^2, reported for sensitivity
  double sensitivity = 0.0;   ///< |p_c(1/L) - p_c(1/L^2)|
};

/// Ordinary least squares of mean against p inside the window.
SizeFit fit_size(const SweepCurve& curve, const WindowRule& rule);

/// Per-size fits, then a linear extrapolation of p(L) to infinite size.
FitResult fit_threshold(const std::vector<SweepCurve>& curves,
                        const WindowRule& rule = sd_fraction_window());

}  // namespace hetperc
