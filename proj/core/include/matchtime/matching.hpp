#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matchtime/sequence.hpp"

namespace matchtime {

// One observation extracted from one sequence of length t.
struct MatchingSample {
  std::size_t ell_plus = 0;   // matching time L+
  std::size_t ell_minus = 0;  // reversed matching time L-
  std::size_t t = 0;          // sequence length in symbols

  friend bool operator==(const MatchingSample&, const MatchingSample&) = default;
};

// Z[0] = n and Z[j] = |lcp(x, x[j..])| for j >= 1. Linear time.
std::vector<std::size_t> z_array(std::span<const Symbol> x);

// Minimal automaton recognising every substring of a fixed text.
//
// Transitions are stored densely over the symbols that actually occur in
// the text, so memory is O(n * distinct symbols).
class SuffixAutomaton {
public:
  explicit SuffixAutomaton(std::span<const Symbol> text);

  // Length of the longest prefix of `pattern` that occurs in the text.
  std::size_t longest_prefix_match(std::span<const Symbol> pattern) const;

  bool contains(std::span<const Symbol> pattern) const {
    return longest_prefix_match(pattern) == pattern.size();
  }

  std::size_t state_count() const noexcept { return len_.size(); }

private:
  std::int32_t add_state(std::int32_t len);
  std::int32_t& next(std::int32_t state, std::size_t slot) {
    return next_[static_cast<std::size_t>(state) * width_ + slot];
  }
  std::int32_t next(std::int32_t state, std::size_t slot) const {
    return next_[static_cast<std::size_t>(state) * width_ + slot];
  }

  std::array<std::int16_t, 256> slot_{};  // symbol -> dense column, -1 if absent
  std::size_t width_ = 0;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> len_;
};

// Shortest l >= 1 such that x[0..l-1] occurs at no start j in [1, n-l].
// Computed as 1 + max_{j>=1} Z[j].
std::size_t matching_time_forward(std::span<const Symbol> x);

// Shortest l >= 1 such that the reversed prefix x[l-1] ... x[0] occurs at no
// start j in [1, n-l]. Equivalently, the shortest prefix of x that is not a
// substring of reverse(x) with its last symbol (x[0]) dropped; answered by a
// suffix automaton over that truncated reversal.
std::size_t matching_time_reversed(std::span<const Symbol> x);

// Direct double-loop transcriptions of the two definitions. Quadratic or
// worse; used as oracles.
std::size_t naive_matching_time_forward(std::span<const Symbol> x);
std::size_t naive_matching_time_reversed(std::span<const Symbol> x);

// (L+, L-, n) for a sequence with n >= 2; throws SequenceTooShort otherwise.
MatchingSample extract_sample(std::span<const Symbol> x);

inline std::vector<std::size_t> z_array(const SymbolSequence& x) { return z_array(x.symbols()); }
inline std::size_t matching_time_forward(const SymbolSequence& x) {
  return matching_time_forward(x.symbols());
}
inline std::size_t matching_time_reversed(const SymbolSequence& x) {
  return matching_time_reversed(x.symbols());
}
inline MatchingSample extract_sample(const SymbolSequence& x) { return extract_sample(x.symbols()); }

}  // namespace matchtime
