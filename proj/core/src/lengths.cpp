#include "matchtime/lengths.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <string>

#include "matchtime/error.hpp"

namespace matchtime {

namespace {

void require_parameters(double k, double lambda) {
  if (!(k > 0.0) || !(lambda > 0.0)) {
    throw DomainError("Gamma parameters require k > 0 and lambda > 0");
  }
}

}  // namespace

void LengthModel::validate() const {
  if (!(k > 0.0)) {
    throw ConfigError("length model shape k must be > 0");
  }
  if (!(lambda > 0.0)) {
    throw ConfigError("length model rate lambda must be > 0");
  }
  if (t_min < 2 || t_min > t_max) {
    throw ConfigError("length window requires 2 <= t_min <= t_max, got [" +
                      std::to_string(t_min) + ", " + std::to_string(t_max) + "]");
  }
}

double gamma_cdf(double x, double k, double lambda) {
  require_parameters(k, lambda);
  if (!(x > 0.0)) {
    return 0.0;
  }
  return boost::math::gamma_p(k, lambda * x);
}

double gamma_survival(double x, double k, double lambda) {
  require_parameters(k, lambda);
  if (!(x > 0.0)) {
    return 1.0;
  }
  return boost::math::gamma_q(k, lambda * x);
}

double length_pmf(std::size_t t, double k, double lambda) {
  if (t < 1) {
    throw DomainError("length pmf is defined for t >= 1");
  }
  const auto x = static_cast<double>(t);
  return gamma_survival(x - 1.0, k, lambda) - gamma_survival(x, k, lambda);
}

double window_mass(const LengthModel& model) {
  model.validate();
  return gamma_survival(static_cast<double>(model.t_min) - 1.0, model.k, model.lambda) -
         gamma_survival(static_cast<double>(model.t_max), model.k, model.lambda);
}

LengthSampler::LengthSampler(const LengthModel& model) : model_(model) {
  model_.validate();
  survival_below_ = gamma_survival(static_cast<double>(model_.t_min) - 1.0, model_.k, model_.lambda);
  mass_ = survival_below_ - gamma_survival(static_cast<double>(model_.t_max), model_.k, model_.lambda);
  if (!(mass_ > 0.0)) {
    throw ConfigError("length window [" + std::to_string(model_.t_min) + ", " +
                      std::to_string(model_.t_max) + "] carries no probability mass");
  }
}

std::size_t LengthSampler::operator()(Rng& rng) const {
  if (model_.t_min == model_.t_max) {
    return model_.t_min;
  }
  // Smallest t in the window with P(T > t) <= target.
  const double target = survival_below_ - uniform01(rng) * mass_;
  std::size_t lo = model_.t_min;
  std::size_t hi = model_.t_max;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (gamma_survival(static_cast<double>(mid), model_.k, model_.lambda) <= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::size_t sample_length(const LengthModel& model, Rng& rng) {
  return LengthSampler(model)(rng);
}

}  // namespace matchtime
