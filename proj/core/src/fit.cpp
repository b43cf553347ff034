#include "hetperc/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hetperc {

namespace {

constexpr std::size_t kMinWindow = 4;

std::string size_label(double L) {
  std::ostringstream s;
  s << L;
  return s.str();
}

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double var_slope = 0.0;
  double var_intercept = 0.0;
  double cov = 0.0;
};

// Weighted least squares y = intercept + slope * x. With known_variance the
// weights are inverse variances and the covariance is (X^T W X)^{-1};
// otherwise the residual variance scales it (zero for an exact fit).
Line least_squares(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& w, bool known_variance) {
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const double xbar = sx / sw;
  const double ybar = sy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
    sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
  }
  if (!(sxx > 0)) throw FitError("fit abscissae are degenerate");
  Line line;
  line.slope = sxy / sxx;
  line.intercept = ybar - line.slope * xbar;

  double scale = 1.0;
  if (!known_variance) {
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - line.intercept - line.slope * x[i];
      rss += w[i] * r * r;
    }
    scale = x.size() > 2 ? rss / static_cast<double>(x.size() - 2) : 0.0;
  }
  line.var_slope = scale / sxx;
  line.var_intercept = scale * (1.0 / sw + xbar * xbar / sxx);
  line.cov = -scale * xbar / sxx;
  return line;
}

Extrapolation extrapolate(const std::vector<SizeFit>& sizes, double power) {
  std::vector<double> x, y, w;
  bool known = true;
  for (const SizeFit& s : sizes) {
    x.push_back(std::pow(s.L, -power));
    y.push_back(s.p_intercept);
    if (!(s.p_intercept_se > 0)) known = false;
  }
  for (const SizeFit& s : sizes) {
    w.push_back(known ? 1.0 / (s.p_intercept_se * s.p_intercept_se) : 1.0);
  }
  const Line line = least_squares(x, y, w, known);
  Extrapolation e;
  e.variable = power == 1.0 ? "1/L" : "1/L^2";
  e.p_c = line.intercept;
  e.p_c_se = std::sqrt(std::max(0.0, line.var_intercept));
  e.slope = line.slope;
  return e;
}

}  // namespace

SweepCurve curve_from_sweep(const SweepResult& sweep, ClusterMode mode, double L) {
  if (std::find(sweep.modes.begin(), sweep.modes.end(), mode) == sweep.modes.end()) {
    throw FitError(std::string("sweep has no data for mode ") + to_string(mode));
  }
  SweepCurve c;
  c.L = L;
  const auto m = static_cast<std::size_t>(mode);
  for (const SweepPoint& pt : sweep.points) {
    c.p.push_back(pt.p);
    c.mean.push_back(pt.largest[m].mean);
    c.se.push_back(pt.largest[m].se);
    c.sd.push_back(pt.largest[m].sd);
  }
  return c;
}

WindowRule sd_fraction_window(double fraction, RunChoice choice) {
  if (!(fraction > 0 && fraction <= 1)) throw FitError("window fraction must lie in (0, 1]");
  WindowRule rule;
  rule.name = std::string(choice == RunChoice::lowest ? "lowest-p" : "peak") +
              " maximal run with sd >= " + std::to_string(fraction) + " * max sd";
  rule.select = [fraction, choice](const SweepCurve& c) {
    if (c.sd.empty()) throw FitError("empty curve");
    const auto peak = static_cast<std::size_t>(std::max_element(c.sd.begin(), c.sd.end()) -
                                               c.sd.begin());
    const double cut = fraction * c.sd[peak];
    std::size_t seed = peak;
    if (choice == RunChoice::lowest) {
      seed = 0;
      while (c.sd[seed] < cut) ++seed;
    }
    FitWindow w{seed, seed};
    while (w.first > 0 && c.sd[w.first - 1] >= cut) --w.first;
    while (w.last + 1 < c.sd.size() && c.sd[w.last + 1] >= cut) ++w.last;
    return w;
  };
  return rule;
}

SizeFit fit_size(const SweepCurve& c, const WindowRule& rule) {
  if (c.p.size() != c.mean.size() || c.p.size() != c.sd.size() || c.p.size() != c.se.size()) {
    throw FitError("curve columns have different lengths");
  }
  const FitWindow w = rule.select(c);
  if (w.last < w.first || w.last >= c.p.size()) throw FitError("window rule left the grid");
  const std::size_t k = w.last - w.first + 1;
  if (k < kMinWindow) {
    throw FitError("fit window for L=" + size_label(c.L) + " has " + std::to_string(k) +
                   " grid points; at least 4 are required");
  }
  std::vector<double> x(c.p.begin() + w.first, c.p.begin() + w.last + 1);
  std::vector<double> y(c.mean.begin() + w.first, c.mean.begin() + w.last + 1);
  const Line line = least_squares(x, y, std::vector<double>(k, 1.0), false);
  if (!(line.slope > 0)) {
    throw FitError("fitted slope for L=" + size_label(c.L) + " is not positive");
  }

  SizeFit f;
  f.L = c.L;
  f.window_p_lo = x.front();
  f.window_p_hi = x.back();
  f.window_points = k;
  f.slope = line.slope;
  f.slope_se = std::sqrt(line.var_slope);
  f.intercept = line.intercept;
  f.p_intercept = -line.intercept / line.slope;
  // Delta method for -b/a.
  const double a = line.slope, b = line.intercept;
  const double var = b * b / (a * a * a * a) * line.var_slope + line.var_intercept / (a * a) -
                     2.0 * b / (a * a * a) * line.cov;
  f.p_intercept_se = std::sqrt(std::max(0.0, var));
  return f;
}

FitResult fit_threshold(const std::vector<SweepCurve>& curves, const WindowRule& rule) {
  std::set<double> distinct;
  for (const SweepCurve& c : curves) {
    if (!(c.L > 0)) throw FitError("system size must be positive");
    distinct.insert(c.L);
  }
  if (distinct.size() < 2) throw FitError("extrapolation needs at least 2 distinct system sizes");
  FitResult r;
  r.window_rule = rule.name;
  for (const SweepCurve& c : curves) r.sizes.push_back(fit_size(c, rule));
  r.primary = extrapolate(r.sizes, 1.0);
  r.alternative = extrapolate(r.sizes, 2.0);
  r.sensitivity = std::abs(r.primary.p_c - r.alternative.p_c);
  return r;
}

}  // namespace hetperc
