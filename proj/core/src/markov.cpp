#include "matchtime/markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matchtime/error.hpp"

namespace matchtime {

namespace {

void require_open_unit(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(what) + " requires 0 < p < 1, got " + std::to_string(p));
  }
}

}  // namespace

MarkovChainSpec::MarkovChainSpec(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("chain parameter p must lie in [0, 1], got " + std::to_string(p));
  }
}

TransitionMatrix MarkovChainSpec::transition_matrix() const noexcept {
  const double q = 1.0 - p_;
  return {{{0.0, p_, q}, {q, 0.0, p_}, {p_, q, 0.0}}};
}

SymbolSequence simulate_from(const MarkovChainSpec& spec, std::size_t length, Symbol start,
                             Rng& rng) {
  if (length < 2) {
    throw InvalidInput("trajectory length must be >= 2, got " + std::to_string(length));
  }
  if (start < 1 || start > 3) {
    throw InvalidInput("initial state must be 1, 2 or 3");
  }
  // Row-wise cumulative thresholds; the last column is the fallback.
  const TransitionMatrix m = spec.transition_matrix();
  std::array<std::array<double, 2>, 3> cut{};
  for (std::size_t r = 0; r < 3; ++r) {
    cut[r] = {m[r][0], m[r][0] + m[r][1]};
  }

  std::vector<Symbol> data(length);
  std::size_t state = start - 1u;
  data[0] = start;
  for (std::size_t i = 1; i < length; ++i) {
    const double u = uniform01(rng);
    state = u < cut[state][0] ? 0 : (u < cut[state][1] ? 1 : 2);
    data[i] = static_cast<Symbol>(state + 1);
  }
  return SymbolSequence(std::move(data), MarkovChainSpec::alphabet());
}

SymbolSequence simulate(const MarkovChainSpec& spec, std::size_t length, Rng& rng) {
  const auto start = static_cast<Symbol>(1 + std::min<std::uint64_t>(2, static_cast<std::uint64_t>(
                                                                            uniform01(rng) * 3.0)));
  return simulate_from(spec, length, start, rng);
}

SymbolSequence simulate(const MarkovChainSpec& spec, std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  return simulate(spec, length, rng);
}

double exact_entropy_rate(double p) {
  require_open_unit(p, "entropy rate");
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double exact_reversed_entropy_rate(double p) {
  require_open_unit(p, "reversed entropy rate");
  return -(1.0 - p) * std::log(p) - p * std::log1p(-p);
}

double exact_entropy_production(double p) {
  require_open_unit(p, "entropy production");
  return (2.0 * p - 1.0) * (std::log(p) - std::log1p(-p));
}

std::vector<ExactRow> sweep_exact(std::span<const double> p_grid) {
  std::vector<ExactRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    rows.push_back({p, exact_entropy_rate(p), exact_reversed_entropy_rate(p),
                    exact_entropy_production(p)});
  }
  return rows;
}

}  // namespace matchtime
