#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "matchtime/sequence.hpp"

namespace matchtime::testing {

// Character codes used directly as symbols.
inline std::vector<Symbol> symbols(std::string_view s) {
  return std::vector<Symbol>(s.begin(), s.end());
}

inline std::vector<Symbol> random_symbols(std::mt19937_64& gen, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(pick(gen));
  return out;
}

}  // namespace matchtime::testing
