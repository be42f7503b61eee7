#pragma once

// Backtracking over trees of words that keep a fixed pseudoperiod while
// avoiding a class of powers, power-free word generation, and bounded
// verification of explicit morphic constructions.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppw/generators.hpp"
#include "ppw/powers.hpp"
#include "ppw/pseudoperiod.hpp"
#include "ppw/word.hpp"

namespace ppw {

struct SearchSpec {
  unsigned alphabet_size = 2;
  PpTuple pp{std::vector<std::size_t>{1, 2}};
  Exponent forbidden{3};  // a factor reaching this threshold kills the branch
  std::size_t depth_cap = 10000;
};

enum class SearchVerdict { FiniteTree, CapExceeded };

struct SearchOutcome {
  SearchVerdict verdict;
  std::size_t longest_length;
  Word witness;  // lexicographically least surviving word of that length
};

/// Depth-first search over all words with the given pseudoperiod avoiding
/// `forbidden`. Words are explored up to renaming of letters. With
/// threads > 1 subtrees are searched in parallel; the outcome is identical.
SearchOutcome longest_constrained_word(const SearchSpec& spec, unsigned threads = 1);

std::string_view verdict_name(SearchVerdict v);

/// Outcome of checking one image prefix.
struct ConstructionReport {
  std::size_t prefix_length = 0;
  PpTuple pp{std::vector<std::size_t>{1}};
  Exponent free_at{1};
  std::optional<std::size_t> pp_violation;  // first_violation on the prefix
  std::optional<PowerWitness> power_witness;
  bool passed() const { return !pp_violation && !power_witness; }
};

/// Checks that the first prefix_len symbols of m(base) have pseudoperiod pp
/// and avoid `free_at` (pass e.g. 3+ to test 3+-freeness). Throws
/// std::invalid_argument when prefix_len < 10 max(pp) or when the image of
/// the available base is too short.
ConstructionReport verify_construction(const Morphism& m, const Word& base, const PpTuple& pp,
                                       const Exponent& free_at, std::size_t prefix_len);
ConstructionReport verify_construction(const Morphism& m, std::string_view base_sequence,
                                       const PpTuple& pp, const Exponent& free_at,
                                       std::size_t prefix_len);

struct ResidueSample {
  std::size_t a;
  std::optional<std::size_t> pp_violation;
};

struct ResidueReport {
  std::size_t prefix_length = 0;
  std::vector<ResidueSample> samples;
  std::optional<PowerWitness> power_witness;  // against 3+
  bool passed() const;
};

/// For an n-uniform m and each sampled a = i mod n: m(t) has pseudoperiod
/// (1, a) and is 3+-free on its first prefix_len symbols. Throws
/// std::invalid_argument when m is not n-uniform or a sample is outside the
/// residue class (or a < 2).
ResidueReport verify_residue_class(const Morphism& m, std::size_t i, std::size_t n,
                                   const std::vector<std::size_t>& samples, std::size_t prefix_len);

/// Thrown when a bounded search runs out of budget.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexicographically least word of length target_len over k letters whose
/// factors all have exponent <= threshold (the plus flag of `threshold` is
/// ignored). `cap` bounds the number of extension attempts.
Word generate_threshold_word(unsigned k, const Exponent& threshold, std::size_t target_len,
                             std::uint64_t cap = 50'000'000);

/// A uniform morphism stored as a common prefix p and per-letter suffixes.
struct UniformTheoremData {
  std::string name;
  std::size_t uniform_length;
  Word prefix;
  Morphism morphism;
  unsigned base_alphabet;     // letters of the preimage words
  Exponent base_threshold;    // preimages are base_threshold+ free
  Exponent image_threshold;   // images are image_threshold+ free
  PpTuple pp;
};

/// Shipped theorem data: "18_37", "4_10", "9_19". Throws std::invalid_argument
/// for an unknown name and std::runtime_error when an image length differs
/// from the declared uniform length.
UniformTheoremData large_alphabet_theorem(std::string_view which);
const std::vector<std::string>& large_alphabet_theorem_names();

/// Parses the theorem data format: `uniform N`, `prefix P`, then one line
/// `LETTER SUFFIX` per letter with image(letter) = P SUFFIX.
Morphism parse_prefixed_uniform(std::string_view text, std::size_t* uniform_length = nullptr,
                                Word* prefix = nullptr);

struct TheoremReport {
  std::string name;
  Word base;
  std::size_t image_length = 0;
  std::optional<std::size_t> pp_violation;
  std::optional<PowerWitness> power_witness;
  std::optional<std::size_t> stray_prefix;  // occurrence of p off a block boundary
  bool passed() const { return !pp_violation && !power_witness && !stray_prefix; }
};

/// Generates a base word of length base_len, maps it through the theorem's
/// morphism and checks the pseudoperiod, the power-freeness and that p occurs
/// in the image only at multiples of the block length.
TheoremReport verify_large_alphabet_theorem(std::string_view which, std::size_t base_len);

/// Morphisms shipped with the library, by name: sha3, h1_6, mu and
/// res_I_N for the residue-class table (res_4_5 is also known as a45).
Morphism shipped_morphism(std::string_view name);
std::vector<std::string> shipped_morphism_names();

/// The residue-class table: (i, n, morphism name) for each row.
struct ResidueRow {
  std::size_t i;
  std::size_t n;
  std::string morphism;
};
std::vector<ResidueRow> residue_table();

}  // namespace ppw
