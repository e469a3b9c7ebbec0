#pragma once

#include <cstddef>

#include "matchtime/rng.hpp"

namespace matchtime {

// Discrete Gamma distribution of sequence lengths, g(t) = G(t) - G(t-1)
// with G the Gamma(shape k, rate lambda) CDF, conditioned on
// t_min <= t <= t_max.
struct LengthModel {
  double k = 1.0;
  double lambda = 1.0 / 1921.0;
  std::size_t t_min = 1000;
  std::size_t t_max = 15000;

  // Throws ConfigError unless k > 0, lambda > 0 and 2 <= t_min <= t_max.
  void validate() const;
};

// Regularized lower incomplete gamma P(k, lambda x); 0 for x < 0.
double gamma_cdf(double x, double k, double lambda);
// 1 - gamma_cdf, evaluated without cancellation.
double gamma_survival(double x, double k, double lambda);

// Untruncated pmf for t >= 1.
double length_pmf(std::size_t t, double k, double lambda);
inline double length_pmf(std::size_t t, const LengthModel& model) {
  return length_pmf(t, model.k, model.lambda);
}

// Untruncated probability of the window [t_min, t_max].
double window_mass(const LengthModel& model);

// Inverse-CDF sampler on the truncated support. Construction validates the
// model and rejects windows with no probability mass.
class LengthSampler {
public:
  explicit LengthSampler(const LengthModel& model);

  std::size_t operator()(Rng& rng) const;
  const LengthModel& model() const noexcept { return model_; }

private:
  LengthModel model_;
  double survival_below_ = 0.0;  // P(T > t_min - 1)
  double mass_ = 0.0;            // P(t_min <= T <= t_max)
};

std::size_t sample_length(const LengthModel& model, Rng& rng);

}  // namespace matchtime
