#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "matchtime/error.hpp"
#include "matchtime/lengths.hpp"

using namespace matchtime;

namespace {

// Truncated mean of the default model on [1000, 15000] and its window mass,
// from direct summation of the k = 1 closed form exp(-lambda (t-1)) - exp(-lambda t).
constexpr double kDefaultTruncatedMean = 2910.9248452053034;
constexpr double kDefaultWindowMass = 0.5940894955229326;

}  // namespace

TEST(GammaCdf, Examples) {
  EXPECT_EQ(gamma_cdf(0.0, 1.0, 1.0), 0.0);
  EXPECT_EQ(gamma_cdf(-3.0, 2.0, 1.0), 0.0);
  EXPECT_NEAR(gamma_cdf(1.0, 1.0, std::log(2.0)), 0.5, 1e-15);
  EXPECT_NEAR(gamma_cdf(1.0, 1.0, 1.0), 0.6321205588285577, 1e-12);
  EXPECT_NEAR(gamma_cdf(2.5, 3.0, 0.7) + gamma_survival(2.5, 3.0, 0.7), 1.0, 1e-15);
}

TEST(GammaCdf, DomainErrors) {
  EXPECT_THROW(gamma_cdf(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(gamma_cdf(1.0, 1.0, -1.0), DomainError);
  EXPECT_THROW(gamma_survival(1.0, -2.0, 1.0), DomainError);
  EXPECT_THROW(length_pmf(0, 1.0, 1.0), DomainError);
}

TEST(LengthPmf, Examples) {
  const double lambda = std::log(2.0);
  EXPECT_NEAR(length_pmf(1, 1.0, lambda), 0.5, 1e-15);
  EXPECT_NEAR(length_pmf(2, 1.0, lambda), 0.25, 1e-15);
}

TEST(LengthPmf, ExponentialModeIsAtOne) {
  const LengthModel model;
  const double first = length_pmf(1, model);
  for (std::size_t t = 2; t < 20000; t += 37) {
    EXPECT_LT(length_pmf(t, model), first);
  }
}

TEST(LengthPmf, NormalisesOverLongRange) {
  for (double k : {1.0, 2.0, 0.5}) {
    double total = 0.0;
    for (std::size_t t = 1; t <= 1000000; ++t) total += length_pmf(t, k, 1.0 / 1921.0);
    EXPECT_NEAR(total, 1.0, 1e-9) << "k = " << k;
  }
}

TEST(LengthPmf, ExponentialClosedForm) {
  const double lambda = 1.0 / 1921.0;
  for (std::size_t t = 1; t < 30000; t += 13) {
    const double x = static_cast<double>(t);
    const double expected = std::exp(-lambda * (x - 1.0)) - std::exp(-lambda * x);
    EXPECT_NEAR(length_pmf(t, 1.0, lambda), expected, 1e-12);
  }
}

TEST(LengthPmf, CdfIsMonotone) {
  for (double k : {0.5, 1.0, 3.0}) {
    double prev = 0.0;
    for (double x = 0.0; x < 20000.0; x += 97.0) {
      const double c = gamma_cdf(x, k, 1.0 / 1921.0);
      EXPECT_GE(c, prev);
      EXPECT_LE(c, 1.0);
      prev = c;
    }
  }
}

TEST(LengthModel, Validation) {
  LengthModel bad;
  bad.k = 0.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = LengthModel{};
  bad.lambda = -1.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = LengthModel{};
  bad.t_min = 20000;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = LengthModel{};
  bad.t_min = 1;
  EXPECT_THROW(bad.validate(), ConfigError);
  EXPECT_NO_THROW(LengthModel{}.validate());
}

TEST(WindowMass, DefaultModel) {
  EXPECT_NEAR(window_mass(LengthModel{}), kDefaultWindowMass, 1e-12);
}

TEST(LengthSampler, SinglePointWindow) {
  LengthModel model;
  model.t_min = 5000;
  model.t_max = 5000;
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_length(model, rng), 5000u);
}

TEST(LengthSampler, StaysInWindow) {
  const LengthModel model;
  const LengthSampler sampler(model);
  Rng rng(8);
  for (int i = 0; i < 20000; ++i) {
    const auto t = sampler(rng);
    ASSERT_GE(t, model.t_min);
    ASSERT_LE(t, model.t_max);
  }
}

TEST(LengthSampler, ZeroMassIsConfigError) {
  LengthModel model;
  model.lambda = 1.0;
  model.t_min = 5000;
  model.t_max = 6000;
  EXPECT_THROW(LengthSampler{model}, ConfigError);
}

TEST(LengthSampler, TruncatedMeanMatchesSummation) {
  const LengthModel model;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t t = model.t_min; t <= model.t_max; ++t) {
    const double g = length_pmf(t, model);
    num += static_cast<double>(t) * g;
    den += g;
  }
  EXPECT_NEAR(num / den, kDefaultTruncatedMean, 1e-6);

  const LengthSampler sampler(model);
  Rng rng(2718);
  const int draws = 100000;
  double total = 0.0;
  for (int i = 0; i < draws; ++i) total += static_cast<double>(sampler(rng));
  EXPECT_NEAR(total / draws, kDefaultTruncatedMean, 0.02 * kDefaultTruncatedMean);
}

TEST(LengthSampler, HistogramDecreases) {
  const LengthModel model;
  const LengthSampler sampler(model);
  Rng rng(31);
  const std::size_t width = 2000;
  std::vector<int> bins((model.t_max - model.t_min) / width + 1, 0);
  for (int i = 0; i < 10000; ++i) ++bins[(sampler(rng) - model.t_min) / width];
  for (std::size_t b = 1; b + 1 < bins.size(); ++b) {
    EXPECT_LE(bins[b], bins[b - 1]) << "bin " << b;
  }
}
