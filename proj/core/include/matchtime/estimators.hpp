#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "matchtime/matching.hpp"

namespace matchtime {

// Matching-time observations from sequences of (generally) different
// lengths. Every admitted sample has t >= 2 and 1 <= ell <= t.
class SampleSet {
public:
  SampleSet() = default;
  explicit SampleSet(std::vector<MatchingSample> samples);

  void add(const MatchingSample& sample);
  void append(const SampleSet& other);

  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  std::span<const MatchingSample> samples() const noexcept { return samples_; }

private:
  std::vector<MatchingSample> samples_;
};

enum class Direction { forward, reversed };

// Sample means over the set, in one direction:
//   a = mean(ell), b = mean(ln t), c = mean(ell^2 / ln t).
struct SampleFunctions {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct VarianceEstimate {
  double value = 0.0;
  // Negative estimate: the normal model does not fit the sample.
  bool degenerate = false;
};

struct ErrorEstimate {
  double value = 0.0;  // NaN when undefined
  bool defined = true;
};

struct EntropyReport {
  double h_hat = 0.0;
  double hR_hat = 0.0;
  double ep_hat = 0.0;  // hR_hat - h_hat
  double sigma2_hat = 0.0;
  double sigma2R_hat = 0.0;
  double err_h = 0.0;
  double err_hR = 0.0;
  std::size_t m = 0;
  double mean_log_t = 0.0;

  bool sigma2_degenerate = false;
  bool sigma2R_degenerate = false;
  bool err_h_defined = true;
  bool err_hR_defined = true;
  // m == 1: variances vanish identically and carry no information.
  bool single_sample = false;
};

SampleFunctions sample_functions(const SampleSet& s, Direction direction);

// Maximum-likelihood entropy rate: sum(ln t_i) / sum(ell_i), in nats/symbol.
double estimate_entropy_rate(const SampleSet& s, Direction direction);

// sigma^2 = h^2 (h c - a). Negative values are returned as-is and flagged.
VarianceEstimate estimate_sigma2(const SampleSet& s, Direction direction);

// Finite-length error: sqrt((sigma^2 / h) * mean(1 / ln t_i)).
ErrorEstimate estimate_error(const SampleSet& s, Direction direction);

EntropyReport full_report(const SampleSet& s);

// True when h_hat exceeds ln(alphabet_size) by more than its error.
bool exceeds_alphabet_bound(const EntropyReport& report, std::size_t alphabet_size);

// ML rate of the k = 1 discrete Gamma length model: 1 / mean(t).
// Independent of every entropy estimate above.
double fit_length_rate(std::span<const std::size_t> lengths);

}  // namespace matchtime
