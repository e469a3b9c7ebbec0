#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matchtime/rng.hpp"
#include "matchtime/sequence.hpp"

namespace matchtime {

using TransitionMatrix = std::array<std::array<double, 3>, 3>;

// Three-state chain on {1, 2, 3} that steps "forward" (1->2->3->1) with
// probability p and "backward" with probability 1-p. The transition matrix
// is doubly stochastic, so the stationary law is uniform; the chain is
// reversible only at p = 1/2.
class MarkovChainSpec {
public:
  explicit MarkovChainSpec(double p);

  double p() const noexcept { return p_; }
  TransitionMatrix transition_matrix() const noexcept;
  static std::array<double, 3> stationary() noexcept { return {1.0 / 3, 1.0 / 3, 1.0 / 3}; }
  // State labels as symbol codes.
  static Alphabet alphabet() { return Alphabet({1, 2, 3}); }

private:
  double p_;
};

// Trajectory of `length` symbols started from a state drawn from the
// stationary law.
SymbolSequence simulate(const MarkovChainSpec& spec, std::size_t length, Rng& rng);
SymbolSequence simulate(const MarkovChainSpec& spec, std::size_t length, std::uint64_t seed);

// Same as simulate() but with a caller-chosen initial state (1, 2 or 3).
SymbolSequence simulate_from(const MarkovChainSpec& spec, std::size_t length, Symbol start,
                             Rng& rng);

// Closed forms in nats/symbol, valid for 0 < p < 1.
double exact_entropy_rate(double p);
double exact_reversed_entropy_rate(double p);
double exact_entropy_production(double p);

struct ExactRow {
  double p = 0.0;
  double h = 0.0;
  double hR = 0.0;
  double ep = 0.0;
};

std::vector<ExactRow> sweep_exact(std::span<const double> p_grid);

}  // namespace matchtime
