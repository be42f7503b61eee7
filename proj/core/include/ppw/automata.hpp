#pragma once

// Deterministic automata over tuples of base-2 digits read most significant
// digit first, in the text format Walnut writes, plus the closed-form
// predicates for the pseudoperiod families of t and vtm.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppw/word.hpp"

namespace ppw {

/// Partial DFA reading columns of `arity` base-2 digits. State 0 is initial;
/// a missing transition rejects.
class TupleDfa {
 public:
  static constexpr std::int32_t kDead = -1;

  TupleDfa(unsigned arity, std::vector<bool> accepting, std::vector<std::int32_t> transitions);

  unsigned arity() const noexcept { return arity_; }
  unsigned digit_base() const noexcept { return 2; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  std::size_t transition_count() const noexcept;
  bool accepting(std::size_t state) const { return accepting_.at(state); }

  /// Target of `state` on a digit column, or kDead.
  std::int32_t next(std::size_t state, std::span<const unsigned> digits) const;
  std::int32_t next_by_column(std::size_t state, unsigned column) const {
    return transitions_[state * columns_ + column];
  }

  /// Column index: digits[0] is the most significant bit of the index.
  unsigned column_of(std::span<const unsigned> digits) const;
  unsigned columns() const noexcept { return columns_; }

 private:
  unsigned arity_;
  unsigned columns_;
  std::vector<bool> accepting_;
  std::vector<std::int32_t> transitions_;  // state * columns_ + column
};

/// Parses the Walnut text format: a header of `msd_2` tags (one per tuple
/// component), then blocks `STATE ACCEPT` followed by `d1 ... dk -> TARGET`
/// lines. Blank lines and trailing whitespace are tolerated. Errors are
/// reported as ParseError with the offending line number.
TupleDfa parse_walnut_dfa(std::string_view text);

/// The automaton `triple` accepting the pseudoperiods (a, b, c) of the
/// Thue-Morse word, as shipped with the library.
std::string_view triple_automaton_text();
const TupleDfa& triple_automaton();

/// Runs the automaton on the base-2 representations of the components,
/// left-padded with zeros to a common length. Throws std::invalid_argument on
/// arity mismatch.
bool dfa_accepts(const TupleDfa& dfa, std::span<const std::uint64_t> tuple);

/// Every accepted tuple with all components in [0, bound], sorted
/// lexicographically. Each tuple is read once, in its shortest representation.
std::vector<std::vector<std::uint64_t>> dfa_enumerate(const TupleDfa& dfa, std::uint64_t bound);

/// a >= 1 and b = a + 2^k, c = a + 2^{k+1} for some k >= 0.
bool shev_cond(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct DistancePredicates {
  bool parta;
  bool partb;
};

/// Membership of n's binary expansion in the regular languages
/// parta = 0*11*0* | 0*1(00)*10* | 0*10110*  and  partb = 0*100*10* | 0*11*0*.
/// Both are false for n = 0.
DistancePredicates tm_distance_predicates(std::uint64_t n);

/// Membership in the three two-parameter families of 3-pseudoperiods of vtm.
bool vtm_triple_predicate(std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace ppw
