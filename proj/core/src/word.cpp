#include "ppw/word.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ppw {

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0 || alphabet_size_ > 256) {
    throw std::invalid_argument("alphabet size must be in [1, 256]");
  }
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_symbols(std::vector<Symbol> symbols) {
  unsigned alphabet = 1;
  for (Symbol s : symbols) alphabet = std::max<unsigned>(alphabet, s + 1u);
  return Word(std::move(symbols), alphabet);
}

Word Word::from_digits(std::string_view digits) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a digit: '" + std::string(1, c) + "'");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return from_symbols(std::move(symbols));
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start) {
    throw std::out_of_range("factor [" + std::to_string(start) + ", +" + std::to_string(length) +
                            ") outside word of length " + std::to_string(size()));
  }
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(start),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(start + length)),
              alphabet_size_);
}

std::size_t Word::distinct_letters() const {
  std::vector<bool> seen(alphabet_size_, false);
  std::size_t count = 0;
  for (Symbol s : symbols_) {
    if (!seen[s]) {
      seen[s] = true;
      ++count;
    }
  }
  return count;
}

std::string Word::str() const {
  std::string out;
  if (alphabet_size_ <= 10) {
    out.reserve(size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

Exponent::Exponent(std::uint64_t numerator, std::uint64_t denominator, bool plus)
    : num_(numerator), den_(denominator), plus_(plus) {
  if (num_ == 0 || den_ == 0) throw std::invalid_argument("exponent must be a positive rational");
  const auto g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Exponent Exponent::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed exponent '" + std::string(text) + "'"); };
  std::string_view t = text;
  bool plus = false;
  if (!t.empty() && t.back() == '+') {
    plus = true;
    t.remove_suffix(1);
  }
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  const auto slash = t.find('/');
  auto read = [&](std::string_view s, std::uint64_t& out) {
    if (s.empty()) throw fail();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw fail();
  };
  if (slash == std::string_view::npos) {
    read(t, num);
  } else {
    read(t.substr(0, slash), num);
    read(t.substr(slash + 1), den);
  }
  if (num == 0 || den == 0) throw fail();
  return Exponent(num, den, plus);
}

bool Exponent::reached_by(std::uint64_t length, std::uint64_t period) const noexcept {
  const auto lhs = static_cast<unsigned __int128>(length) * den_;
  const auto rhs = static_cast<unsigned __int128>(num_) * period;
  return plus_ ? lhs > rhs : lhs >= rhs;
}

std::uint64_t Exponent::min_length(std::uint64_t period) const noexcept {
  // smallest L with L*den >= num*period (or > for e+)
  const auto target = static_cast<unsigned __int128>(num_) * period;
  auto length = static_cast<std::uint64_t>(target / den_);
  if (plus_ || static_cast<unsigned __int128>(length) * den_ < target) ++length;
  return length;
}

std::string Exponent::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  if (plus_) out.push_back('+');
  return out;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
  const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
  const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.plus_ <=> b.plus_;
}

// ---------------------------------------------------------------------------

namespace {

// Border array: border[i] is the length of the longest proper border of w[0..i].
std::vector<std::size_t> borders(std::span<const Symbol> w) {
  std::vector<std::size_t> border(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return border;
}

}  // namespace

std::vector<std::size_t> periods(const Word& w) {
  if (w.empty()) throw std::domain_error("periods of the empty word are undefined");
  const auto border = borders(w.symbols());
  // p is a period iff |w| - p is a border length; walk the border chain.
  std::vector<std::size_t> result;
  std::size_t b = border.back();
  while (b > 0) {
    result.push_back(w.size() - b);
    b = border[b - 1];
  }
  result.push_back(w.size());
  return result;
}

std::size_t smallest_period(std::span<const Symbol> w) {
  if (w.empty()) throw std::domain_error("periods of the empty word are undefined");
  return w.size() - borders(w).back();
}

Exponent exponent(const Word& w) {
  if (w.empty()) throw std::domain_error("exponent of the empty word is undefined");
  return Exponent(w.size(), smallest_period(w.symbols()));
}

Word fractional_power(const Word& x, std::uint64_t num, std::uint64_t den) {
  if (x.empty() || den == 0 || x.size() % den != 0) {
    throw std::domain_error("fractional power needs a denominator dividing |x|");
  }
  if (num < den) throw std::domain_error("fractional power exponent must be >= 1");
  const std::size_t length = num * (x.size() / den);
  std::vector<Symbol> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = x[i % x.size()];
  return Word(std::move(out), x.alphabet_size());
}

std::vector<Run> runs(const Word& w) {
  std::vector<Run> result;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == w[i]) ++j;
    result.push_back({w[i], i, j - i});
    i = j;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string CodedWord::display() const {
  if (letters.empty()) return word.str();
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(letters[s]);
  return out;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

CodedWord parse_integers(std::string_view text) {
  std::vector<Symbol> symbols;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value > 255) {
      throw ParseError(0, "bad symbol '" + token + "' (expected an integer in [0, 255])");
    }
    symbols.push_back(static_cast<Symbol>(value));
  }
  return {Word::from_symbols(std::move(symbols)), {}};
}

CodedWord parse_digits(std::string_view text) {
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(0, "non-digit '" + std::string(1, c) + "' in digit word");
  }
  return {Word::from_digits(text), {}};
}

CodedWord parse_letters(std::string_view text) {
  std::string letters;
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (is_space(c)) throw ParseError(0, "whitespace inside a letter word");
    auto pos = letters.find(c);
    if (pos == std::string::npos) {
      if (letters.size() == 256) throw ParseError(0, "more than 256 distinct letters");
      pos = letters.size();
      letters.push_back(c);
    }
    symbols.push_back(static_cast<Symbol>(pos));
  }
  const auto alphabet = static_cast<unsigned>(std::max<std::size_t>(1, letters.size()));
  return {Word(std::move(symbols), alphabet), std::move(letters)};
}

}  // namespace

CodedWord parse_word(std::string_view text, WordFormat format) {
  text = trim(text);
  switch (format) {
    case WordFormat::Digits: return parse_digits(text);
    case WordFormat::Integers: return parse_integers(text);
    case WordFormat::Letters: return parse_letters(text);
    case WordFormat::Auto: break;
  }
  if (std::any_of(text.begin(), text.end(), is_space)) return parse_integers(text);
  if (std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return parse_digits(text);
  }
  return parse_letters(text);
}

}  // namespace ppw
