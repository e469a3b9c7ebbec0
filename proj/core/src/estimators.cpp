#include "matchtime/estimators.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "matchtime/error.hpp"

namespace matchtime {

namespace {

void validate(const MatchingSample& s) {
  if (s.t < 2) {
    throw InvalidInput("sample length t must be >= 2, got " + std::to_string(s.t));
  }
  if (s.ell_plus < 1 || s.ell_plus > s.t || s.ell_minus < 1 || s.ell_minus > s.t) {
    throw InvalidInput("matching times must lie in [1, t]");
  }
}

// Plain sums in sample order; the result does not depend on scheduling.
struct Sums {
  double log_t = 0.0;
  double inv_log_t = 0.0;
  double ell = 0.0;
  double ell_sq_over_log_t = 0.0;
  std::size_t m = 0;
};

Sums accumulate(const SampleSet& s, Direction direction) {
  if (s.empty()) {
    throw InvalidInput("sample set is empty");
  }
  Sums sums;
  for (const auto& sample : s.samples()) {
    const double log_t = std::log(static_cast<double>(sample.t));
    const double ell = static_cast<double>(direction == Direction::forward ? sample.ell_plus
                                                                           : sample.ell_minus);
    sums.log_t += log_t;
    sums.inv_log_t += 1.0 / log_t;
    sums.ell += ell;
    sums.ell_sq_over_log_t += ell * ell / log_t;
  }
  sums.m = s.size();
  return sums;
}

struct DirectionEstimate {
  double h = 0.0;
  VarianceEstimate sigma2;
  ErrorEstimate error;
};

// sigma^2 = h^2 (h c - a) is evaluated in the centred form
// h^3 * mean(ln t_i (x_i - 1/h)^2), x_i = ell_i / ln t_i. The two agree
// algebraically; the centred sum cannot go negative through cancellation.
DirectionEstimate estimate(const SampleSet& s, Direction direction, const Sums& sums) {
  const double m = static_cast<double>(sums.m);
  DirectionEstimate out;
  out.h = sums.log_t / sums.ell;

  const double inv_h = 1.0 / out.h;
  double centred = 0.0;
  for (const auto& sample : s.samples()) {
    const double log_t = std::log(static_cast<double>(sample.t));
    const double ell = static_cast<double>(direction == Direction::forward ? sample.ell_plus
                                                                           : sample.ell_minus);
    const double d = ell / log_t - inv_h;
    centred += log_t * d * d;
  }
  out.sigma2.value = out.h * out.h * out.h * (centred / m);
  out.sigma2.degenerate = out.sigma2.value < 0.0;
  if (out.sigma2.degenerate) {
    out.error = {std::numeric_limits<double>::quiet_NaN(), false};
  } else {
    out.error.value = std::sqrt(out.sigma2.value / out.h * (sums.inv_log_t / m));
  }
  return out;
}

DirectionEstimate estimate(const SampleSet& s, Direction direction) {
  return estimate(s, direction, accumulate(s, direction));
}

}  // namespace

SampleSet::SampleSet(std::vector<MatchingSample> samples) : samples_(std::move(samples)) {
  for (const auto& s : samples_) {
    validate(s);
  }
}

void SampleSet::add(const MatchingSample& sample) {
  validate(sample);
  samples_.push_back(sample);
}

void SampleSet::append(const SampleSet& other) {
  samples_.insert(samples_.end(), other.samples_.begin(), other.samples_.end());
}

SampleFunctions sample_functions(const SampleSet& s, Direction direction) {
  const Sums sums = accumulate(s, direction);
  const double m = static_cast<double>(sums.m);
  return {sums.ell / m, sums.log_t / m, sums.ell_sq_over_log_t / m};
}

double estimate_entropy_rate(const SampleSet& s, Direction direction) {
  const Sums sums = accumulate(s, direction);
  return sums.log_t / sums.ell;
}

VarianceEstimate estimate_sigma2(const SampleSet& s, Direction direction) {
  return estimate(s, direction).sigma2;
}

ErrorEstimate estimate_error(const SampleSet& s, Direction direction) {
  return estimate(s, direction).error;
}

EntropyReport full_report(const SampleSet& s) {
  const Sums fwd_sums = accumulate(s, Direction::forward);
  const Sums rev_sums = accumulate(s, Direction::reversed);
  const DirectionEstimate fwd = estimate(s, Direction::forward, fwd_sums);
  const DirectionEstimate rev = estimate(s, Direction::reversed, rev_sums);

  EntropyReport r;
  r.h_hat = fwd.h;
  r.hR_hat = rev.h;
  r.ep_hat = r.hR_hat - r.h_hat;
  r.sigma2_hat = fwd.sigma2.value;
  r.sigma2R_hat = rev.sigma2.value;
  r.sigma2_degenerate = fwd.sigma2.degenerate;
  r.sigma2R_degenerate = rev.sigma2.degenerate;
  r.err_h = fwd.error.value;
  r.err_hR = rev.error.value;
  r.err_h_defined = fwd.error.defined;
  r.err_hR_defined = rev.error.defined;
  r.m = s.size();
  r.mean_log_t = fwd_sums.log_t / static_cast<double>(fwd_sums.m);
  r.single_sample = r.m == 1;
  return r;
}

bool exceeds_alphabet_bound(const EntropyReport& report, std::size_t alphabet_size) {
  const double slack = report.err_h_defined ? report.err_h : 0.0;
  return report.h_hat > std::log(static_cast<double>(alphabet_size)) + slack;
}

double fit_length_rate(std::span<const std::size_t> lengths) {
  if (lengths.empty()) {
    throw InvalidInput("cannot fit a length model to an empty list");
  }
  double total = 0.0;
  for (std::size_t t : lengths) {
    if (t < 1) {
      throw InvalidInput("sequence lengths must be >= 1");
    }
    total += static_cast<double>(t);
  }
  return static_cast<double>(lengths.size()) / total;
}

}  // namespace matchtime
