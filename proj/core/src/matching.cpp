#include "matchtime/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "matchtime/error.hpp"

namespace matchtime {

namespace {

void require_nonempty(std::span<const Symbol> x) {
  if (x.empty()) {
    throw InvalidInput("sequence must contain at least one symbol");
  }
}

}  // namespace

std::vector<std::size_t> z_array(std::span<const Symbol> x) {
  require_nonempty(x);
  const std::size_t n = x.size();
  std::vector<std::size_t> z(n, 0);
  z[0] = n;
  // [left, right) is the rightmost window known to match a prefix of x.
  std::size_t left = 0;
  std::size_t right = 0;
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t k = 0;
    if (j < right) {
      k = std::min(right - j, z[j - left]);
    }
    while (j + k < n && x[k] == x[j + k]) {
      ++k;
    }
    z[j] = k;
    if (j + k > right) {
      left = j;
      right = j + k;
    }
  }
  return z;
}

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text) {
  if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2)) {
    throw InvalidInput("text too long for suffix automaton");
  }
  slot_.fill(-1);
  for (Symbol s : text) {
    if (slot_[s] < 0) {
      slot_[s] = static_cast<std::int16_t>(width_++);
    }
  }
  const std::size_t max_states = std::max<std::size_t>(1, 2 * text.size());
  next_.reserve(max_states * width_);
  link_.reserve(max_states);
  len_.reserve(max_states);

  add_state(0);
  link_[0] = -1;
  std::int32_t last = 0;
  for (Symbol s : text) {
    const auto c = static_cast<std::size_t>(slot_[s]);
    const std::int32_t cur = add_state(len_[last] + 1);
    std::int32_t p = last;
    while (p != -1 && next(p, c) == -1) {
      next(p, c) = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
    } else {
      const std::int32_t q = next(p, c);
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        const std::int32_t clone = add_state(len_[p] + 1);
        std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q * width_), width_,
                    next_.begin() + static_cast<std::ptrdiff_t>(clone * width_));
        link_[clone] = link_[q];
        while (p != -1 && next(p, c) == q) {
          next(p, c) = clone;
          p = link_[p];
        }
        link_[q] = clone;
        link_[cur] = clone;
      }
    }
    last = cur;
  }
}

std::int32_t SuffixAutomaton::add_state(std::int32_t len) {
  const auto id = static_cast<std::int32_t>(len_.size());
  len_.push_back(len);
  link_.push_back(-1);
  next_.resize(next_.size() + width_, -1);
  return id;
}

std::size_t SuffixAutomaton::longest_prefix_match(std::span<const Symbol> pattern) const {
  std::int32_t state = 0;
  std::size_t matched = 0;
  for (Symbol s : pattern) {
    const std::int16_t c = slot_[s];
    if (c < 0) {
      break;
    }
    const std::int32_t to = next(state, static_cast<std::size_t>(c));
    if (to < 0) {
      break;
    }
    state = to;
    ++matched;
  }
  return matched;
}

std::size_t matching_time_forward(std::span<const Symbol> x) {
  const auto z = z_array(x);
  std::size_t longest = 0;
  for (std::size_t j = 1; j < z.size(); ++j) {
    longest = std::max(longest, z[j]);
  }
  return longest + 1;
}

std::size_t matching_time_reversed(std::span<const Symbol> x) {
  require_nonempty(x);
  // reverse(x) without its final symbol: x[n-1], x[n-2], ..., x[1].
  std::vector<Symbol> truncated(x.rbegin(), x.rend() - 1);
  const SuffixAutomaton index(truncated);
  // The truncated reversal has n-1 symbols, so at most n-1 can match.
  return index.longest_prefix_match(x) + 1;
}

std::size_t naive_matching_time_forward(std::span<const Symbol> x) {
  require_nonempty(x);
  const std::size_t n = x.size();
  for (std::size_t ell = 1; ell <= n; ++ell) {
    bool recurs = false;
    for (std::size_t j = 1; j + ell <= n && !recurs; ++j) {
      bool equal = true;
      for (std::size_t i = 0; i < ell && equal; ++i) {
        equal = x[i] == x[j + i];
      }
      recurs = equal;
    }
    if (!recurs) {
      return ell;
    }
  }
  return n;
}

std::size_t naive_matching_time_reversed(std::span<const Symbol> x) {
  require_nonempty(x);
  const std::size_t n = x.size();
  for (std::size_t ell = 1; ell <= n; ++ell) {
    bool occurs = false;
    for (std::size_t j = 1; j + ell <= n && !occurs; ++j) {
      bool equal = true;
      for (std::size_t i = 0; i < ell && equal; ++i) {
        equal = x[ell - 1 - i] == x[j + i];
      }
      occurs = equal;
    }
    if (!occurs) {
      return ell;
    }
  }
  return n;
}

MatchingSample extract_sample(std::span<const Symbol> x) {
  if (x.size() < 2) {
    throw SequenceTooShort("a matching sample needs at least 2 symbols, got " +
                           std::to_string(x.size()));
  }
  return {matching_time_forward(x), matching_time_reversed(x), x.size()};
}

}  // namespace matchtime
