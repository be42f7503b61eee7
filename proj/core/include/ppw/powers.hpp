#pragma once

// Fractional powers in finite words: witnesses, e-freeness and critical
// exponents. A factor f "reaches" e when exp(f) >= e, and reaches e+ when
// exp(f) > e. All arithmetic is exact.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ppw/word.hpp"

namespace ppw {

struct PowerWitness {
  std::size_t start;
  std::size_t length;
  std::size_t period;  // smallest period of the factor

  friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

/// Leftmost, then shortest, factor whose exponent reaches e; nullopt if w
/// avoids e. Throws std::domain_error when e < 1.
std::optional<PowerWitness> contains_power_at_least(const Word& w, const Exponent& e);

/// Every factor has exponent < e.
bool is_e_free(const Word& w, const Exponent& e);

/// Every factor has exponent <= e.
bool is_e_plus_free(const Word& w, const Exponent& e);

/// Maximum exponent over nonempty factors. Throws std::domain_error on empty w.
Exponent critical_exponent(const Word& w);

/// Incremental power detection for words grown one symbol at a time, as in
/// backtracking searches. Only factors ending at the new last position are
/// examined on each push, one candidate per period.
class SuffixPowerGuard {
 public:
  explicit SuffixPowerGuard(Exponent threshold);

  /// Appends s. Returns true when some suffix of the new word reaches the
  /// threshold (the word is then rejected, but still pushed: call pop()).
  bool push(Symbol s);
  void pop();

  std::size_t size() const noexcept { return word_.size(); }
  std::span<const Symbol> word() const noexcept { return word_; }

 private:
  Exponent threshold_;
  std::vector<Symbol> word_;
  std::vector<std::size_t> min_length_;  // min_length_[n] = threshold_.min_length(n)
};

}  // namespace ppw
