#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace matchtime {

using Symbol = std::uint8_t;

// An ordered set of distinct symbol codes, 2 to 256 of them.
class Alphabet {
public:
  explicit Alphabet(std::vector<Symbol> symbols);

  // Codes first, first+1, ..., first+size-1.
  static Alphabet range(std::size_t size, Symbol first = 0);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(Symbol s) const noexcept { return members_.test(s); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

private:
  std::vector<Symbol> symbols_;
  std::bitset<256> members_;
};

// A nonempty finite sequence of symbols drawn from an alphabet.
//
// Indices are 0-based. The sequence owns its data; analysis routines take
// the span returned by symbols().
class SymbolSequence {
public:
  SymbolSequence(std::vector<Symbol> data, Alphabet alphabet);

  std::size_t size() const noexcept { return data_.size(); }
  std::span<const Symbol> symbols() const noexcept { return data_; }
  Symbol operator[](std::size_t i) const noexcept { return data_[i]; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

private:
  std::vector<Symbol> data_;
  Alphabet alphabet_;
};

}  // namespace matchtime
