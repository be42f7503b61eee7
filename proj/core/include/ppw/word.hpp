#pragma once

// Finite words over small integer alphabets, exact exponents, runs and
// periods. Everything else in the library is built on these types.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppw {

using Symbol = std::uint8_t;

/// Parse failure carrying the 1-based line it was detected on (0 when the
/// input has no line structure).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A finite word. Positions are 0-based everywhere in the library.
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument if a symbol is >= alphabet_size.
  Word(std::vector<Symbol> symbols, unsigned alphabet_size);

  /// Alphabet inferred as max symbol + 1.
  static Word from_symbols(std::vector<Symbol> symbols);

  /// Convenience for literals such as "0110100": one decimal digit per symbol.
  static Word from_digits(std::string_view digits);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const Symbol* data() const noexcept { return symbols_.data(); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  Word factor(std::size_t start, std::size_t length) const;
  Word prefix(std::size_t length) const { return factor(0, std::min(length, size())); }

  /// Number of distinct symbols actually present.
  std::size_t distinct_letters() const;

  /// Digits for alphabets <= 10, otherwise space-separated integers.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_size_ = 1;
};

/// An exponent threshold e or e+ with e a positive rational in lowest terms.
/// Ordering follows the extended reals: e < e+ < f for every rational f > e.
class Exponent {
 public:
  Exponent(std::uint64_t numerator, std::uint64_t denominator = 1, bool plus = false);

  /// Accepts "7/3", "7/3+", "3", "3+".
  static Exponent parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  bool plus() const noexcept { return plus_; }

  /// True when a repetition of the given length and period has exponent
  /// length/period at or beyond this threshold (>= for e, > for e+).
  bool reached_by(std::uint64_t length, std::uint64_t period) const noexcept;

  /// Smallest length whose ratio to `period` reaches the threshold.
  std::uint64_t min_length(std::uint64_t period) const noexcept;

  std::string str() const;

  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept;
  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_ && a.plus_ == b.plus_;
  }

 private:
  std::uint64_t num_;
  std::uint64_t den_;
  bool plus_;
};

struct Run {
  Symbol symbol;
  std::size_t start;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// All periods p (1 <= p <= |w|), ascending. Throws std::domain_error on empty w.
std::vector<std::size_t> periods(const Word& w);

std::size_t smallest_period(std::span<const Symbol> w);

/// |w| / smallest period, plus flag cleared.
Exponent exponent(const Word& w);

/// The prefix of length num*|x|/den of x x x ...
/// Requires den | |x| and num >= den.
Word fractional_power(const Word& x, std::uint64_t num, std::uint64_t den);

/// Maximal runs, left to right.
std::vector<Run> runs(const Word& w);

// ---------------------------------------------------------------------------
// Text format

enum class WordFormat { Auto, Digits, Integers, Letters };

/// A parsed word together with the display letters for text alphabets
/// (empty when the input was numeric).
struct CodedWord {
  Word word;
  std::string letters;

  std::string display() const;
};

/// Auto-detection: whitespace-separated tokens are integers, a single token of
/// decimal digits is one symbol per digit, anything else is a text word whose
/// letters are coded 0, 1, ... in order of first appearance.
CodedWord parse_word(std::string_view text, WordFormat format = WordFormat::Auto);

}  // namespace ppw
