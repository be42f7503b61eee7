#pragma once

// Pseudoperiods: a tuple 0 < p_1 < ... < p_k is a pseudoperiod of
// w = a_0 ... a_{t-1} when a_i is one of a_{i+p_1}, ..., a_{i+p_k} for every
// 0 <= i < t - p_k. Verdicts on prefixes of infinite words are evidence only.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppw/word.hpp"

namespace ppw {

/// Strictly increasing tuple of positive offsets; never empty.
class PpTuple {
 public:
  /// Throws std::invalid_argument unless entries are nonempty, >= 1 and
  /// strictly increasing.
  explicit PpTuple(std::vector<std::size_t> entries);

  /// Accepts "(1,8,9)" and "1,8,9".
  static PpTuple parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t max() const noexcept { return entries_.back(); }
  std::size_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::size_t> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool contains(std::size_t p) const;

  /// "(1,8,9)"
  std::string str() const;

  friend auto operator<=>(const PpTuple&, const PpTuple&) = default;

 private:
  std::vector<std::size_t> entries_;
};

/// Vacuously true when |w| <= max(t).
bool is_pseudoperiod(const Word& w, const PpTuple& t);

/// Smallest i < |w| - max(t) with w[i] not in {w[i+p] : p in t}.
std::optional<std::size_t> first_violation(const Word& w, const PpTuple& t);

/// Independent checker: tests each distinct factor of length max(t)+1 once,
/// at its first position. Agrees with is_pseudoperiod.
bool is_pseudoperiod_by_factors(const Word& w, const PpTuple& t);

/// All k-subsets of [1, bound] that are pseudoperiods of w, in lexicographic
/// order. `threads` splits the work by smallest element; output does not
/// depend on it.
std::vector<PpTuple> enumerate_pseudoperiods(const Word& w, std::size_t k, std::size_t bound,
                                             unsigned threads = 1);

/// Lexicographically least k-subset of [1, bound] that is a pseudoperiod.
std::optional<PpTuple> find_pseudoperiod(const Word& w, std::size_t k, std::size_t bound);

/// Smallest k <= bound admitting a pseudoperiod inside [1, bound].
std::optional<std::size_t> min_pseudoperiod_size(const Word& w, std::size_t bound);

/// Largest distance between consecutive occurrences of one letter (0 when no
/// letter repeats). Throws std::domain_error when |w| < 2.
std::size_t max_gap(const Word& w);

/// (1, 2, ..., B+1) where B is the longest non-initial run of a binary word.
/// Throws std::domain_error on non-binary input or a single-run word.
PpTuple run_length_tuple(const Word& w);

/// Membership in a*(ab)*(a + empty) for distinct letters a, b; the empty word
/// and unary words match.
bool matches_pp12_form(const Word& w);

/// Number of k-subsets of [1, bound], saturating at SIZE_MAX.
std::size_t subset_count(std::size_t bound, std::size_t k);

}  // namespace ppw
