#include "ppw/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace ppw {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("morphism needs at least one image");
  target_alphabet_ = 1;
  for (const auto& img : images_) {
    if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
    for (Symbol s : img) target_alphabet_ = std::max<unsigned>(target_alphabet_, s + 1u);
  }
  const auto first = images_.front().size();
  if (std::all_of(images_.begin(), images_.end(), [&](const Word& w) { return w.size() == first; })) {
    uniform_length_ = first;
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::string body(text);
  // Walnut wrapper: morphism NAME "...":
  if (const auto open = body.find('"'); open != std::string::npos) {
    const auto close = body.find('"', open + 1);
    if (close == std::string::npos) throw ParseError(0, "unterminated quoted morphism");
    body = body.substr(open + 1, close - open - 1);
  }
  std::map<unsigned, std::vector<Symbol>> parsed;
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    const auto arrow = token.find("->");
    if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= token.size()) {
      throw ParseError(0, "expected symbol->image, got '" + token + "'");
    }
    unsigned symbol = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + arrow, symbol);
    if (ec != std::errc{} || ptr != token.data() + arrow || symbol > 255) {
      throw ParseError(0, "bad source symbol in '" + token + "'");
    }
    std::vector<Symbol> image;
    for (std::size_t i = arrow + 2; i < token.size(); ++i) {
      const char c = token[i];
      if (c < '0' || c > '9') throw ParseError(0, "bad image symbol '" + std::string(1, c) + "'");
      image.push_back(static_cast<Symbol>(c - '0'));
    }
    if (!parsed.emplace(symbol, std::move(image)).second) {
      throw ParseError(0, "symbol " + std::to_string(symbol) + " has two images");
    }
  }
  if (parsed.empty()) throw ParseError(0, "empty morphism");
  std::vector<Word> images;
  for (unsigned s = 0; s <= parsed.rbegin()->first; ++s) {
    auto it = parsed.find(s);
    if (it == parsed.end()) throw ParseError(0, "symbol " + std::to_string(s) + " has no image");
    images.push_back(Word::from_symbols(std::move(it->second)));
  }
  return Morphism(std::move(images));
}

const Word& Morphism::image(Symbol s) const {
  if (s >= images_.size()) {
    throw std::invalid_argument("symbol " + std::to_string(s) + " outside morphism domain");
  }
  return images_[s];
}

bool Morphism::prolongable_on(Symbol seed) const {
  if (seed >= images_.size()) return false;
  const Word& img = images_[seed];
  return img.size() >= 2 && img[0] == seed && target_alphabet_ <= images_.size();
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (s) out.push_back(' ');
    out += std::to_string(s) + "->";
    for (Symbol c : images_[s]) out += std::to_string(c);
  }
  return out;
}

Word apply_morphism(const Morphism& m, const Word& w) {
  std::vector<Symbol> out;
  if (auto len = m.uniform_length()) out.reserve(*len * w.size());
  for (Symbol s : w) {
    const Word& img = m.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), m.target_alphabet());
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  std::vector<Word> images;
  images.reserve(inner.domain_size());
  for (std::size_t s = 0; s < inner.domain_size(); ++s) {
    images.push_back(apply_morphism(outer, inner.image(static_cast<Symbol>(s))));
  }
  return Morphism(std::move(images));
}

namespace {

std::vector<Symbol> fixed_point_symbols(const Morphism& m, Symbol seed, std::size_t n) {
  if (!m.prolongable_on(seed)) {
    throw std::domain_error("morphism is not prolongable on symbol " + std::to_string(seed));
  }
  std::vector<Symbol> out;
  if (n == 0) return out;
  out.reserve(n + 64);
  const Word& head = m.image(seed);
  out.assign(head.begin(), head.end());
  // m(out[0..i)) is a prefix of out; keep expanding the next symbol.
  for (std::size_t i = 1; out.size() < n; ++i) {
    const Word& img = m.image(out[i]);
    out.insert(out.end(), img.begin(), img.end());
  }
  out.resize(n);
  return out;
}

std::vector<Symbol> rudin_shapiro_symbols(std::size_t n) {
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Symbol>(std::popcount(static_cast<std::uint64_t>(i & (i >> 1))) & 1);
  }
  return out;
}

struct RegistryEntry {
  std::string name;
  std::string morphism;  // empty for rs
  Symbol seed;
  unsigned alphabet;
};

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"t", "0->01 1->10", 0, 2},
      {"f", "0->01 1->0", 0, 2},
      {"tr", "0->01 1->02 2->0", 0, 3},
      {"vtm", "0->1 1->20 2->210", 2, 3},
      {"mw", "0->001 1->110", 0, 2},
      {"pd", "0->11 1->10", 1, 2},
      {"rs", "", 0, 2},
  };
  return entries;
}

const RegistryEntry& lookup(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

class PrefixCache {
 public:
  Word get(const RegistryEntry& entry, std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(entry.name);
      if (it != cache_.end() && it->second.size() >= n) return slice(entry, it->second, n);
    }
    std::unique_lock lock(mutex_);
    auto& cached = cache_[entry.name];
    if (cached.size() < n) {
      const std::size_t chunk = std::bit_ceil(std::max<std::size_t>({n, 1024, 2 * cached.size()}));
      cached = entry.morphism.empty()
                   ? rudin_shapiro_symbols(chunk)
                   : fixed_point_symbols(Morphism::parse(entry.morphism), entry.seed, chunk);
    }
    return slice(entry, cached, n);
  }

 private:
  static Word slice(const RegistryEntry& entry, const std::vector<Symbol>& all, std::size_t n) {
    return Word(std::vector<Symbol>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)),
                entry.alphabet);
  }

  std::shared_mutex mutex_;
  std::map<std::string, std::vector<Symbol>> cache_;
};

}  // namespace

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n) {
  return Word(fixed_point_symbols(m, seed, n), static_cast<unsigned>(m.domain_size()));
}

Word named_sequence(std::string_view name, std::size_t n) {
  static PrefixCache cache;
  return cache.get(lookup(name), n);
}

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::optional<MorphicDefinition> morphic_definition(std::string_view name) {
  const auto& entry = lookup(name);
  if (entry.morphism.empty()) return std::nullopt;
  return MorphicDefinition{Morphism::parse(entry.morphism), entry.seed};
}

Word rudin_shapiro_prefix(std::size_t n) { return Word(rudin_shapiro_symbols(n), 2); }

Word paperfolding_word(const PaperfoldingCode& code) {
  if (code.instructions.empty()) throw std::invalid_argument("paperfolding code must be nonempty");
  if (code.instructions.size() > 30) throw std::invalid_argument("paperfolding code too long");
  std::vector<Symbol> word;
  word.reserve((std::size_t{1} << code.instructions.size()) - 1);
  for (int f : code.instructions) {
    if (f != 1 && f != -1) throw std::invalid_argument("unfolding instructions must be +1 or -1");
    const std::size_t half = word.size();
    word.push_back(f == 1 ? kFoldSymbolPlus : kFoldSymbolMinus);
    for (std::size_t i = half; i-- > 0;) word.push_back(static_cast<Symbol>(1 - word[i]));
  }
  return Word(std::move(word), 2);
}

Word sturmian_characteristic(const ContinuedFraction& cf, std::size_t n) {
  const auto& c = cf.partial_quotients;
  if (c.empty()) throw std::invalid_argument("continued fraction needs at least one partial quotient");
  if (std::any_of(c.begin(), c.end(), [](std::uint64_t q) { return q == 0; })) {
    throw std::invalid_argument("partial quotients must be positive");
  }
  if (n == 0) return Word({}, 2);

  std::vector<Symbol> prev{0};  // s_0
  // s_1 = s_0^{c_1 - 1} s_{-1}; from then on s_j = s_{j-1}^{c_j} s_{j-2}.
  std::vector<Symbol> current(c[0] - 1, 0);
  current.push_back(1);
  std::size_t j = 1;
  while (current.size() < n) {
    if (j >= c.size()) {
      throw std::invalid_argument("not enough partial quotients for a prefix of length " +
                                  std::to_string(n));
    }
    std::vector<Symbol> next;
    next.reserve(current.size() * c[j] + prev.size());
    for (std::uint64_t r = 0; r < c[j] && next.size() < n + current.size(); ++r) {
      next.insert(next.end(), current.begin(), current.end());
    }
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(current);
    current = std::move(next);
    ++j;
  }
  current.resize(n);
  return Word(std::move(current), 2);
}

}  // namespace ppw
