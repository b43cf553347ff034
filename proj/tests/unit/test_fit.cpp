#include <gtest/gtest.h>

#include <cmath>

#include "hetperc/fit.hpp"

namespace hetperc {
namespace {

// Linear rise 10 (p - p_L) on a grid 0.30..0.60, with sd equal to 1 on the
// rise and 0.1 elsewhere. p_L = 0.40 + 1/L.
SweepCurve synthetic(double L, double noise_sd_outside = 0.1) {
  SweepCurve c;
  c.L = L;
  const double pl = 0.40 + 1.0 / L;
  for (int i = 0; i <= 30; ++i) {
    const double p = 0.30 + 0.01 * i;
    c.p.push_back(p);
    const bool rising = p >= pl - 1e-12 && p <= pl + 0.06 + 1e-12;
    c.mean.push_back(10.0 * (p - pl));
    c.sd.push_back(rising ? 1.0 : noise_sd_outside);
    c.se.push_back(c.sd.back() / 10.0);
  }
  return c;
}

TEST(Fit, RecoversExactLine) {
  const SizeFit f = fit_size(synthetic(50), sd_fraction_window());
  EXPECT_NEAR(f.slope, 10.0, 1e-9);
  EXPECT_NEAR(f.p_intercept, 0.42, 1e-9);
  EXPECT_NEAR(f.slope_se, 0.0, 1e-6);
  EXPECT_EQ(f.window_points, 7u);
  EXPECT_NEAR(f.window_p_lo, 0.42, 1e-12);
  EXPECT_NEAR(f.window_p_hi, 0.48, 1e-12);
}

TEST(Fit, ExtrapolatesAgainstInverseSize) {
  const FitResult r = fit_threshold({synthetic(50), synthetic(100)});
  ASSERT_EQ(r.sizes.size(), 2u);
  EXPECT_EQ(r.primary.variable, "1/L");
  EXPECT_NEAR(r.primary.p_c, 0.40, 1e-9);
  EXPECT_NEAR(r.primary.slope, 1.0, 1e-6);
  EXPECT_EQ(r.alternative.variable, "1/L^2");
  EXPECT_NEAR(r.alternative.p_c, 0.41 - 0.01 / 3.0, 1e-9);
  EXPECT_NEAR(r.sensitivity, std::abs(r.primary.p_c - r.alternative.p_c), 1e-15);
}

TEST(Fit, LowestAndPeakRunsDiffer) {
  SweepCurve c = synthetic(50);
  // Second, taller run of large sd at high p.
  for (std::size_t i = 25; i <= 29; ++i) c.sd[i] = 1.5;
  const WindowRule lowest = sd_fraction_window(0.5, RunChoice::lowest);
  const WindowRule peak = sd_fraction_window(0.5, RunChoice::peak);
  const FitWindow a = lowest.select(c);
  const FitWindow b = peak.select(c);
  EXPECT_NEAR(c.p[a.first], 0.42, 1e-12);
  EXPECT_EQ(b.first, 25u);
  EXPECT_EQ(b.last, 29u);
}

TEST(Fit, NarrowWindowIsRejected) {
  SweepCurve c = synthetic(50);
  for (double& s : c.sd) s = 0.1;
  c.sd[12] = 1.0;
  c.sd[13] = 1.0;
  EXPECT_THROW(fit_size(c, sd_fraction_window()), FitError);
}

TEST(Fit, NonPositiveSlopeIsRejected) {
  SweepCurve c = synthetic(50);
  for (double& m : c.mean) m = -m;
  EXPECT_THROW(fit_size(c, sd_fraction_window()), FitError);
}

TEST(Fit, NeedsTwoDistinctSizes) {
  EXPECT_THROW(fit_threshold({synthetic(50)}), FitError);
  EXPECT_THROW(fit_threshold({synthetic(50), synthetic(50)}), FitError);
}

TEST(Fit, RejectsBadFraction) {
  EXPECT_THROW(sd_fraction_window(0.0), FitError);
  EXPECT_THROW(sd_fraction_window(1.5), FitError);
}

}  // namespace
}  // namespace hetperc
