#pragma once

// Exact finite prefixes of the infinite words studied here: morphic fixed
// points, Rudin-Shapiro, paperfolding words and characteristic Sturmian words.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppw/word.hpp"

namespace ppw {

/// A non-erasing morphism on {0, ..., domain_size-1}.
class Morphism {
 public:
  /// images[s] is the image of symbol s; every image must be nonempty.
  explicit Morphism(std::vector<Word> images);

  /// Text form `0->01 1->10`. A Walnut-style wrapper
  /// `morphism NAME "0->01 1->10":` is also accepted.
  static Morphism parse(std::string_view text);

  std::size_t domain_size() const noexcept { return images_.size(); }
  unsigned target_alphabet() const noexcept { return target_alphabet_; }
  const Word& image(Symbol s) const;
  std::optional<std::size_t> uniform_length() const noexcept { return uniform_length_; }

  /// True when image(seed) starts with seed, has length >= 2 and the morphism
  /// maps its domain into itself.
  bool prolongable_on(Symbol seed) const;

  std::string str() const;

 private:
  std::vector<Word> images_;
  unsigned target_alphabet_ = 1;
  std::optional<std::size_t> uniform_length_;
};

Word apply_morphism(const Morphism& m, const Word& w);

/// outer o inner: s -> outer(inner(s)).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// First n symbols of the fixed point of m starting with seed.
/// Throws std::domain_error when m is not prolongable on seed.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n);

/// Registry of named sequences: t, f, tr, vtm, mw, pd, rs.
/// Prefixes are memoized per process in power-of-two chunks; safe to call
/// from several threads.
Word named_sequence(std::string_view name, std::size_t n);
const std::vector<std::string>& sequence_names();

/// The defining morphism and seed of a registered morphic sequence
/// (every registry entry except rs).
struct MorphicDefinition {
  Morphism morphism;
  Symbol seed;
};
std::optional<MorphicDefinition> morphic_definition(std::string_view name);

/// r[i] = number of (overlapping) 11 blocks in the binary expansion of i, mod 2.
Word rudin_shapiro_prefix(std::size_t n);

/// Finite sequence of unfolding instructions, each +1 or -1.
struct PaperfoldingCode {
  std::vector<int> instructions;
};

/// Symbol written for an instruction: +1 -> 1, -1 -> 0. With every
/// instruction +1 this yields the regular paperfolding word 1101100111001001...
inline constexpr Symbol kFoldSymbolPlus = 1;
inline constexpr Symbol kFoldSymbolMinus = 0;

/// Word of length 2^|code| - 1 from P_1 = b(f_1),
/// P_{j+1} = P_j b(f_{j+1}) complement(reverse(P_j)). Index i of the result
/// is position i+1 of the sequence in 1-based numbering.
Word paperfolding_word(const PaperfoldingCode& code);

/// Continued fraction [0; c_1, c_2, ...] of a slope in (0, 1).
struct ContinuedFraction {
  std::vector<std::uint64_t> partial_quotients;
};

/// Prefix of the characteristic Sturmian word via standard words:
/// s_{-1} = 1, s_0 = 0, s_1 = 0^{c_1 - 1} 1, s_j = s_{j-1}^{c_j} s_{j-2}.
/// Throws std::invalid_argument when the quotients run out before length n.
Word sturmian_characteristic(const ContinuedFraction& cf, std::size_t n);

}  // namespace ppw
