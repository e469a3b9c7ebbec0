#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cli/experiments.hpp"
#include "cli/table.hpp"
#include "matchtime/error.hpp"
#include "matchtime/markov.hpp"
#include "matchtime/parallel.hpp"

namespace matchtime::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultM = 2000;
constexpr std::size_t kFullScaleM = 10000;

// Every flag of every subcommand lands here.
struct RunConfig {
  std::string command;
  std::vector<double> p;
  std::vector<std::size_t> t;
  std::optional<std::size_t> m;
  std::uint64_t seed = 1;
  std::size_t t_min = 1000;
  std::size_t t_max = 15000;
  double k = 1.0;
  double lambda = 1.0 / 1921.0;
  std::string policy = "reject-record";
  std::string format = "csv";
  std::string out;
  double scale = 1.0;
  bool paper_scale = false;
  std::string map;
  std::string header_regex;
  std::string rejections;
  std::size_t bin_width = 2000;
  std::size_t workers = default_workers();
  std::vector<std::string> inputs;
  std::string figure;
  std::string config_file;
};

std::size_t effective_m(const RunConfig& c) {
  const double base = static_cast<double>(c.m.value_or(c.paper_scale ? kFullScaleM : kDefaultM));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base * c.scale)));
}

LengthModel length_model(const RunConfig& c) { return {c.k, c.lambda, c.t_min, c.t_max}; }

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "Master RNG seed");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output file (default: stdout)");
  sub->add_option("--workers", c.workers, "Worker threads");
  sub->add_option("--config", c.config_file, "JSON file with option values; flags override it");
}

void add_scale(CLI::App* sub, RunConfig& c) {
  sub->add_option("--scale", c.scale, "Multiplier on realizations (and on max t for reproduce)");
  sub->add_flag("--paper-scale", c.paper_scale, "Use m = 10^4 realizations instead of 2000");
}

void add_length_model(CLI::App* sub, RunConfig& c) {
  sub->add_option("--k", c.k, "Gamma shape");
  sub->add_option("--lambda", c.lambda, "Gamma rate (1/symbols)");
  sub->add_option("--t-min", c.t_min, "Smallest admitted length");
  sub->add_option("--t-max", c.t_max, "Largest admitted length");
}

void build(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);

  auto* fixed = app.add_subcommand("simulate-fixed", "Fixed-length Markov chain experiment");
  fixed->add_option("--p", c.p, "Chain parameter")->expected(1);
  fixed->add_option("--t", c.t, "Sequence lengths")->delimiter(',');
  fixed->add_option("--m", c.m, "Realizations per length");
  add_scale(fixed, c);
  add_common(fixed, c);

  auto* random = app.add_subcommand("simulate-random", "Random-length Markov chain sweep");
  random->add_option("--p", c.p, "Chain parameters (default 0.01..0.99)")->delimiter(',');
  random->add_option("--m", c.m, "Realizations per parameter");
  add_length_model(random, c);
  add_scale(random, c);
  add_common(random, c);

  auto* fasta = app.add_subcommand("analyze-fasta", "Per-chromosome analysis of coding sequences");
  fasta->add_option("inputs", c.inputs, "FASTA files");
  fasta->add_option("--map", c.map, "File-to-chromosome mapping");
  fasta->add_option("--header-regex", c.header_regex, "Chromosome regex (first capture group)");
  fasta->add_option("--t-min", c.t_min, "Minimum sequence length in bp");
  fasta->add_option("--policy", c.policy, "Ambiguous-base policy")
      ->check(CLI::IsMember({"reject", "reject-record", "split", "split-at-ambiguity", "skip",
                             "skip-symbol"}));
  fasta->add_option("--rejections", c.rejections, "Write the rejection log here");
  add_common(fasta, c);

  auto* repro = app.add_subcommand("reproduce", "Regenerate the data behind a figure");
  repro->add_option("figure", c.figure, "fig1, fig2, fig3 or fig4");
  repro->add_option("--bin-width", c.bin_width, "Histogram bin width for fig3");
  add_length_model(repro, c);
  add_scale(repro, c);
  add_common(repro, c);

  auto* lengths = app.add_subcommand("lengths-sample", "Draw sequence lengths from the model");
  lengths->add_option("--m", c.m, "Number of draws");
  add_length_model(lengths, c);
  add_common(lengths, c);
}

std::vector<std::string> json_to_args(const Json& value) {
  if (value.is_array()) {
    std::string joined;
    for (const auto& item : value) {
      if (!joined.empty()) joined += ',';
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    return {joined};
  }
  if (value.is_string()) {
    return {value.get<std::string>()};
  }
  return {value.dump()};
}

// Prepends values from the JSON config for every option not given on the
// command line.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args,
                                           const std::string& path, CLI::App* sub) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open config file " + path);
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw UsageError("config file must hold a JSON object");
  }

  std::vector<std::string> extra{sub->get_name()};
  std::vector<std::string> positional;
  for (const auto& [raw_key, value] : doc.items()) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "config") {
      continue;
    }
    if (key == "inputs" || key == "figure") {
      if (sub->get_option_no_throw(key) && sub->get_option(key)->count() == 0) {
        if (value.is_array()) {
          for (const auto& item : value) positional.push_back(item.get<std::string>());
        } else {
          positional.push_back(value.get<std::string>());
        }
      }
      continue;
    }
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw UsageError("config key '" + raw_key + "' is not an option of " + sub->get_name());
    }
    if (opt->count() > 0) {
      continue;
    }
    if (opt->get_type_size() == 0) {  // flag
      if (value.is_boolean() && value.get<bool>()) {
        extra.push_back("--" + key);
      }
      continue;
    }
    extra.push_back("--" + key);
    for (auto& v : json_to_args(value)) extra.push_back(std::move(v));
  }

  std::vector<std::string> merged = extra;
  // Original arguments minus the subcommand name.
  bool skipped = false;
  for (const auto& a : args) {
    if (!skipped && a == sub->get_name()) {
      skipped = true;
      continue;
    }
    merged.push_back(a);
  }
  for (auto& p : positional) merged.push_back(std::move(p));
  return merged;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void validate_length_model(const RunConfig& c) {
  try {
    const LengthSampler sampler(length_model(c));
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

void validate(RunConfig& c) {
  require(c.workers >= 1, "--workers must be >= 1");
  require(c.scale > 0.0 && std::isfinite(c.scale), "--scale must be positive");
  if (c.m) require(*c.m >= 1, "--m must be >= 1");

  if (c.command == "simulate-fixed") {
    if (c.p.empty()) c.p = {0.5};
    if (c.t.empty()) c.t = {1000, 10000, 100000};
    require(c.p.front() > 0.0 && c.p.front() < 1.0, "--p must lie in (0, 1)");
    for (auto t : c.t) require(t >= 2, "every --t must be >= 2");
  } else if (c.command == "simulate-random") {
    if (c.p.empty()) c.p = default_p_grid();
    for (double p : c.p) require(p > 0.0 && p < 1.0, "every --p must lie in (0, 1)");
    validate_length_model(c);
  } else if (c.command == "analyze-fasta") {
    require(!c.inputs.empty(), "analyze-fasta needs at least one FASTA file");
    require(c.t_min >= 2, "--t-min must be >= 2");
  } else if (c.command == "reproduce") {
    require(c.figure == "fig1" || c.figure == "fig2" || c.figure == "fig3" || c.figure == "fig4",
            "unknown figure '" + c.figure + "' (expected fig1, fig2, fig3 or fig4)");
    require(c.bin_width >= 1, "--bin-width must be >= 1");
    if (c.figure == "fig3" || c.figure == "fig4") validate_length_model(c);
  } else if (c.command == "lengths-sample") {
    validate_length_model(c);
  }
}

Cell num(double v) { return v; }
Cell count(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string report_flags(const EntropyReport& r, bool exceeds_bound = false) {
  std::vector<std::string> flags;
  if (r.single_sample) flags.emplace_back("single-sample");
  if (r.sigma2_degenerate) flags.emplace_back("sigma2-degenerate");
  if (r.sigma2R_degenerate) flags.emplace_back("sigma2R-degenerate");
  if (exceeds_bound) flags.emplace_back("h-exceeds-ln4");
  std::string joined;
  for (const auto& f : flags) {
    if (!joined.empty()) joined += ';';
    joined += f;
  }
  return joined;
}

void append_report(std::vector<Cell>& row, const EntropyReport& r) {
  row.insert(row.end(), {num(r.h_hat), num(r.hR_hat), num(r.ep_hat), num(r.err_h), num(r.err_hR),
                         num(r.sigma2_hat), num(r.sigma2R_hat)});
}

const std::vector<std::string> kReportColumns{"h_hat", "hR_hat", "ep_hat", "err_h",
                                              "err_hR", "sigma2", "sigma2R"};

Table fixed_table(const std::vector<FixedLengthRow>& rows, std::size_t m) {
  Table table;
  table.columns = {"t", "m"};
  table.columns.insert(table.columns.end(), kReportColumns.begin(), kReportColumns.end());
  table.columns.insert(table.columns.end(), {"h_exact", "hR_exact", "ep_exact", "flags"});
  for (const auto& r : rows) {
    std::vector<Cell> row{count(r.t), count(m)};
    append_report(row, r.report);
    row.insert(row.end(), {num(r.h_exact), num(r.hR_exact), num(r.ep_exact),
                           report_flags(r.report)});
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table random_table(const std::vector<RandomLengthRow>& rows, std::size_t m) {
  Table table;
  table.columns = {"p", "m", "mean_t"};
  table.columns.insert(table.columns.end(), kReportColumns.begin(), kReportColumns.end());
  table.columns.insert(table.columns.end(), {"h_exact", "hR_exact", "ep_exact", "flags"});
  for (const auto& r : rows) {
    std::vector<Cell> row{num(r.p), count(m), num(r.mean_t)};
    append_report(row, r.report);
    row.insert(row.end(), {num(r.h_exact), num(r.hR_exact), num(r.ep_exact),
                           report_flags(r.report)});
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table analysis_table(const FastaAnalysis& a) {
  Table table;
  table.columns = {"group", "count", "mean_length"};
  table.columns.insert(table.columns.end(), kReportColumns.begin(), kReportColumns.end());
  table.columns.insert(table.columns.end(), {"ep_rel_std", "flags"});
  auto group_row = [&](const GroupReport& g) {
    std::vector<Cell> row{g.label, count(g.count), num(g.mean_length)};
    append_report(row, g.report);
    row.insert(row.end(), {std::monostate{}, report_flags(g.report, g.exceeds_bound)});
    return row;
  };
  for (const auto& g : a.chromosomes) {
    table.rows.push_back(group_row(g));
  }
  table.rows.push_back(group_row(a.pooled));
  table.rows.push_back({std::string("chromosome-mean"), count(a.chromosomes.size()),
                        std::monostate{}, num(a.h_chromosome_mean), num(a.hR_chromosome_mean),
                        num(a.ep_chromosome_mean), std::monostate{}, std::monostate{},
                        std::monostate{}, std::monostate{}, num(a.ep_relative_std),
                        std::string()});
  return table;
}

Table histogram_table(const std::vector<HistogramBin>& bins) {
  Table table;
  table.columns = {"bin_lo", "bin_hi", "count", "expected"};
  for (const auto& b : bins) {
    table.rows.push_back({count(b.lo), count(b.hi), count(b.count), num(b.expected)});
  }
  return table;
}

Json model_json(const RunConfig& c) {
  return Json{{"k", c.k}, {"lambda", c.lambda}, {"t_min", c.t_min}, {"t_max", c.t_max}};
}

// Figure-specific t grid for fig1/fig2, capped at max_t.
std::vector<std::size_t> figure_t_grid(double max_t) {
  std::vector<std::size_t> grid;
  for (std::size_t t : {500, 1000, 2000, 5000, 10000, 20000, 50000, 100000, 200000, 500000,
                        1000000}) {
    if (grid.empty() || static_cast<double>(t) <= max_t) grid.push_back(t);
  }
  return grid;
}

struct Output {
  Table table;
  Metadata meta;
};

Output execute(const RunConfig& c) {
  Output o;
  o.meta.command = c.command;
  o.meta.seed = c.seed;
  const std::size_t m = effective_m(c);

  if (c.command == "simulate-fixed") {
    const FixedLengthConfig cfg{c.p.front(), c.t, m, c.seed, c.workers};
    o.meta.config = {{"p", cfg.p}, {"t", cfg.t_list}, {"m", m}, {"scale", c.scale},
                     {"paper_scale", c.paper_scale}};
    o.table = fixed_table(run_fixed_length(cfg), m);
  } else if (c.command == "simulate-random") {
    const RandomLengthConfig cfg{c.p, length_model(c), m, c.seed, c.workers};
    o.meta.config = {{"p", c.p}, {"m", m}, {"length_model", model_json(c)}, {"scale", c.scale},
                     {"paper_scale", c.paper_scale}};
    o.table = random_table(run_random_length(cfg), m);
  } else if (c.command == "analyze-fasta") {
    FastaAnalysisConfig cfg;
    cfg.paths = c.inputs;
    if (!c.map.empty()) cfg.map_file = c.map;
    if (!c.header_regex.empty()) cfg.header_pattern = c.header_regex;
    cfg.policy = {c.t_min, parse_ambiguity_policy(c.policy)};
    cfg.workers = c.workers;
    o.meta.config = {{"inputs", c.inputs},         {"map", c.map},
                     {"header_regex", c.header_regex}, {"t_min", c.t_min},
                     {"policy", std::string(to_string(cfg.policy.ambiguity))}};
    const FastaAnalysis analysis = analyze_fasta(cfg);
    if (!c.rejections.empty()) {
      std::ofstream log(c.rejections, std::ios::binary);
      if (!log) throw InvalidInput("cannot write rejection log " + c.rejections);
      write_rejection_log(log, analysis.rejections);
    }
    o.meta.config["records"] = analysis.records;
    o.meta.config["rejected"] = analysis.rejections.size();
    o.table = analysis_table(analysis);
  } else if (c.command == "reproduce") {
    o.meta.config = {{"figure", c.figure}, {"scale", c.scale}, {"paper_scale", c.paper_scale}};
    if (c.figure == "fig1" || c.figure == "fig2") {
      const double max_t = (c.paper_scale ? 1e6 : 1e5) * c.scale;
      const FixedLengthConfig cfg{c.figure == "fig1" ? 0.5 : 0.6, figure_t_grid(max_t), m, c.seed,
                                  c.workers};
      o.meta.config["p"] = cfg.p;
      o.meta.config["t"] = cfg.t_list;
      o.meta.config["m"] = m;
      o.table = fixed_table(run_fixed_length(cfg), m);
    } else if (c.figure == "fig3") {
      const auto draws =
          std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(1e4 * c.scale)));
      o.meta.config["draws"] = draws;
      o.meta.config["bin_width"] = c.bin_width;
      o.meta.config["length_model"] = model_json(c);
      o.table = histogram_table(length_histogram(length_model(c), draws, c.bin_width, c.seed));
    } else {
      const RandomLengthConfig cfg{default_p_grid(), length_model(c), m, c.seed, c.workers};
      o.meta.config["m"] = m;
      o.meta.config["length_model"] = model_json(c);
      o.table = random_table(run_random_length(cfg), m);
    }
  } else if (c.command == "lengths-sample") {
    const std::size_t draws = c.m.value_or(10000);
    o.meta.config = {{"m", draws}, {"length_model", model_json(c)}};
    const LengthSampler sampler(length_model(c));
    Rng rng(stream_seed(c.seed, 0));
    o.table.columns = {"index", "t"};
    for (std::size_t i = 0; i < draws; ++i) {
      o.table.rows.push_back({count(i), count(sampler(rng))});
    }
  }
  o.meta.config["seed"] = c.seed;
  return o;
}

void emit(const Output& o, const RunConfig& c, std::ostream& out) {
  auto write = [&](std::ostream& s) {
    if (c.format == "json") {
      write_json(s, o.table, o.meta);
    } else {
      write_csv(s, o.table, o.meta);
    }
  };
  if (c.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) {
    throw InvalidInput("cannot write output file " + c.out);
  }
  write(file);
}

// Parses `args` into `c`; returns the selected subcommand.
CLI::App* parse(CLI::App& app, RunConfig& c, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  app.parse(args);
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    return sub;
  }
  return nullptr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Entropy rate and entropy production from matching times", "matchtime"};
  build(app, config);
  try {
    CLI::App* sub = parse(app, config, args);
    if (!config.config_file.empty()) {
      const auto merged = merge_config_file(args, config.config_file, sub);
      RunConfig merged_config;
      CLI::App merged_app{"", "matchtime"};
      build(merged_app, merged_config);
      parse(merged_app, merged_config, merged);
      config = merged_config;
    }
    validate(config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    emit(execute(config), config, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kSuccess;
}

}  // namespace matchtime::cli
