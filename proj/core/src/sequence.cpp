#include "matchtime/sequence.hpp"

#include <string>
#include <utility>

#include "matchtime/error.hpp"

namespace matchtime {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2 || symbols_.size() > 256) {
    throw InvalidInput("alphabet size must be in [2, 256], got " +
                       std::to_string(symbols_.size()));
  }
  for (Symbol s : symbols_) {
    if (members_.test(s)) {
      throw InvalidInput("alphabet symbol " + std::to_string(s) + " is repeated");
    }
    members_.set(s);
  }
}

Alphabet Alphabet::range(std::size_t size, Symbol first) {
  if (size + first > 256) {
    throw InvalidInput("alphabet range exceeds symbol code space");
  }
  std::vector<Symbol> codes(size);
  for (std::size_t i = 0; i < size; ++i) {
    codes[i] = static_cast<Symbol>(first + i);
  }
  return Alphabet(std::move(codes));
}

SymbolSequence::SymbolSequence(std::vector<Symbol> data, Alphabet alphabet)
    : data_(std::move(data)), alphabet_(std::move(alphabet)) {
  if (data_.empty()) {
    throw InvalidInput("symbol sequence must be nonempty");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!alphabet_.contains(data_[i])) {
      throw InvalidInput("symbol " + std::to_string(data_[i]) + " at index " +
                         std::to_string(i) + " is not in the alphabet");
    }
  }
}

}  // namespace matchtime
