#include "cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "matchtime/markov.hpp"
#include "matchtime/matching.hpp"
#include "matchtime/parallel.hpp"
#include "matchtime/rng.hpp"

namespace matchtime::cli {

SampleSet simulate_fixed_samples(double p, std::size_t t, std::size_t m, std::uint64_t seed,
                                 std::size_t workers) {
  const MarkovChainSpec spec(p);
  std::vector<MatchingSample> samples(m);
  parallel_for(m, workers, [&](std::size_t i) {
    Rng rng = stream_rng(seed, i);
    samples[i] = extract_sample(simulate(spec, t, rng));
  });
  return SampleSet(std::move(samples));
}

std::vector<FixedLengthRow> run_fixed_length(const FixedLengthConfig& config) {
  if (config.m == 0) {
    throw InvalidInput("number of realizations m must be >= 1");
  }
  std::vector<FixedLengthRow> rows;
  for (std::size_t k = 0; k < config.t_list.size(); ++k) {
    const std::size_t t = config.t_list[k];
    const SampleSet samples =
        simulate_fixed_samples(config.p, t, config.m, stream_seed(config.seed, k), config.workers);
    rows.push_back({t, full_report(samples), exact_entropy_rate(config.p),
                    exact_reversed_entropy_rate(config.p), exact_entropy_production(config.p)});
  }
  return rows;
}

std::vector<RandomLengthRow> run_random_length(const RandomLengthConfig& config) {
  if (config.m == 0) {
    throw InvalidInput("number of realizations m must be >= 1");
  }
  const LengthSampler sampler(config.model);
  std::vector<RandomLengthRow> rows;
  for (std::size_t k = 0; k < config.p_grid.size(); ++k) {
    const double p = config.p_grid[k];
    const MarkovChainSpec spec(p);
    const std::uint64_t sub = stream_seed(config.seed, k);
    std::vector<MatchingSample> samples(config.m);
    parallel_for(config.m, config.workers, [&](std::size_t i) {
      Rng rng = stream_rng(sub, i);
      const std::size_t t = sampler(rng);
      samples[i] = extract_sample(simulate(spec, t, rng));
    });
    double total_t = 0.0;
    for (const auto& s : samples) {
      total_t += static_cast<double>(s.t);
    }
    const SampleSet set(std::move(samples));
    rows.push_back({p, total_t / static_cast<double>(config.m), full_report(set),
                    exact_entropy_rate(p), exact_reversed_entropy_rate(p),
                    exact_entropy_production(p)});
  }
  return rows;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 99; ++i) {
    grid.push_back(i / 100.0);
  }
  return grid;
}

namespace {

GroupReport make_group_report(const ChromosomeGroup& group) {
  GroupReport g;
  g.label = group.label;
  g.count = group.count();
  g.mean_length = group.mean_length;
  g.report = full_report(group.samples);
  g.exceeds_bound = exceeds_alphabet_bound(g.report, 4);
  return g;
}

}  // namespace

FastaAnalysis analyze_fasta(const FastaAnalysisConfig& config) {
  ChromosomeResolver resolver;
  if (config.map_file) {
    resolver.load_mapping_file(*config.map_file);
  }
  if (config.header_pattern) {
    resolver.set_header_pattern(*config.header_pattern);
  }

  std::vector<std::vector<FastaRecord>> per_file(config.paths.size());
  parallel_for(config.paths.size(), config.workers,
               [&](std::size_t i) { per_file[i] = read_fasta_file(config.paths[i]); });
  std::vector<FastaRecord> records;
  for (auto& file_records : per_file) {
    resolver.assign(file_records);
    records.insert(records.end(), std::make_move_iterator(file_records.begin()),
                   std::make_move_iterator(file_records.end()));
  }

  FilterResult filtered = to_coding_sequences(records, config.policy);
  if (filtered.accepted.empty()) {
    throw EmptyAnalysis("no sequence passed the filters (" + std::to_string(records.size()) +
                        " records read, t_min = " + std::to_string(config.policy.t_min) + ")");
  }
  const GroupedSamples grouped = group_and_sample(filtered.accepted, config.workers);

  FastaAnalysis out;
  out.records = records.size();
  out.rejections = std::move(filtered.rejections);
  for (const auto& group : grouped.groups) {
    out.chromosomes.push_back(make_group_report(group));
  }
  out.pooled = make_group_report(grouped.pooled);

  const auto n = static_cast<double>(out.chromosomes.size());
  for (const auto& g : out.chromosomes) {
    out.h_chromosome_mean += g.report.h_hat / n;
    out.hR_chromosome_mean += g.report.hR_hat / n;
    out.ep_chromosome_mean += g.report.ep_hat / n;
  }
  if (out.chromosomes.size() >= 2) {
    double ss = 0.0;
    for (const auto& g : out.chromosomes) {
      const double d = g.report.ep_hat - out.ep_chromosome_mean;
      ss += d * d;
    }
    out.ep_chromosome_std = std::sqrt(ss / (n - 1.0));
    out.ep_relative_std = out.ep_chromosome_std / out.ep_chromosome_mean;
  } else {
    out.ep_chromosome_std = std::numeric_limits<double>::quiet_NaN();
    out.ep_relative_std = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<HistogramBin> length_histogram(const LengthModel& model, std::size_t draws,
                                           std::size_t bin_width, std::uint64_t seed) {
  if (bin_width == 0) {
    throw InvalidInput("histogram bin width must be >= 1");
  }
  const LengthSampler sampler(model);
  const double mass = window_mass(model);

  std::vector<HistogramBin> bins;
  for (std::size_t lo = model.t_min; lo <= model.t_max; lo += bin_width) {
    const std::size_t hi = std::min(model.t_max, lo + bin_width - 1);
    const double p = gamma_survival(static_cast<double>(lo) - 1.0, model.k, model.lambda) -
                     gamma_survival(static_cast<double>(hi), model.k, model.lambda);
    bins.push_back({lo, hi, 0, static_cast<double>(draws) * p / mass});
  }
  Rng rng(stream_seed(seed, 0));
  for (std::size_t i = 0; i < draws; ++i) {
    const std::size_t t = sampler(rng);
    ++bins[(t - model.t_min) / bin_width].count;
  }
  return bins;
}

}  // namespace matchtime::cli
