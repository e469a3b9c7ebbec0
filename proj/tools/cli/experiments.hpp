#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchtime/error.hpp"
#include "matchtime/estimators.hpp"
#include "matchtime/genomics.hpp"
#include "matchtime/lengths.hpp"

namespace matchtime::cli {

// Seeding rule shared by every experiment: parameter point k of a run with
// master seed s uses sub-seed stream_seed(s, k), and realization i within it
// draws from stream_rng(that sub-seed, i).

struct FixedLengthConfig {
  double p = 0.5;
  std::vector<std::size_t> t_list{1000, 10000, 100000};
  std::size_t m = 2000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

struct FixedLengthRow {
  std::size_t t = 0;
  EntropyReport report;
  double h_exact = 0.0;
  double hR_exact = 0.0;
  double ep_exact = 0.0;
};

std::vector<FixedLengthRow> run_fixed_length(const FixedLengthConfig& config);

struct RandomLengthConfig {
  std::vector<double> p_grid;
  LengthModel model;
  std::size_t m = 2000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

struct RandomLengthRow {
  double p = 0.0;
  double mean_t = 0.0;
  EntropyReport report;
  double h_exact = 0.0;
  double hR_exact = 0.0;
  double ep_exact = 0.0;
};

std::vector<RandomLengthRow> run_random_length(const RandomLengthConfig& config);

// The matching samples behind one parameter point, for diagnostics such as
// the distribution of L+/ln t.
SampleSet simulate_fixed_samples(double p, std::size_t t, std::size_t m, std::uint64_t seed,
                                 std::size_t workers);

// 0.01, 0.02, ..., 0.99.
std::vector<double> default_p_grid();

struct FastaAnalysisConfig {
  std::vector<std::string> paths;
  std::optional<std::string> map_file;
  std::optional<std::string> header_pattern;
  FilterPolicy policy;
  std::size_t workers = 1;
};

struct GroupReport {
  std::string label;
  std::size_t count = 0;
  double mean_length = 0.0;
  EntropyReport report;
  bool exceeds_bound = false;  // h_hat > ln 4 + err_h
};

struct FastaAnalysis {
  std::vector<GroupReport> chromosomes;
  GroupReport pooled;
  // Across chromosomes: plain means, and sample standard deviation of ep_hat.
  double h_chromosome_mean = 0.0;
  double hR_chromosome_mean = 0.0;
  double ep_chromosome_mean = 0.0;
  double ep_chromosome_std = 0.0;
  double ep_relative_std = 0.0;  // std / mean; NaN with fewer than two groups
  std::size_t records = 0;
  std::vector<Rejection> rejections;
};

class EmptyAnalysis : public Error {
public:
  using Error::Error;
};

// Throws EmptyAnalysis when no sequence survives filtering.
FastaAnalysis analyze_fasta(const FastaAnalysisConfig& config);

struct HistogramBin {
  std::size_t lo = 0;  // inclusive
  std::size_t hi = 0;  // inclusive
  std::size_t count = 0;
  double expected = 0.0;  // draws * P(bin | window)
};

// Histogram of `draws` truncated lengths in bins of `bin_width` starting at t_min.
std::vector<HistogramBin> length_histogram(const LengthModel& model, std::size_t draws,
                                           std::size_t bin_width, std::uint64_t seed);

}  // namespace matchtime::cli
