#include "ppw/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <map>
#include <thread>
#include <tuple>

#include "embedded_data.hpp"

namespace ppw {

namespace {

// A word grown one letter at a time under both constraints. Letters are
// introduced in order (the first occurrence of letter j follows that of j-1).
class TreeWalker {
 public:
  TreeWalker(const PpTuple& pp, const Exponent& forbidden, unsigned alphabet)
      : pp_(pp), guard_(forbidden), alphabet_(alphabet) {
    distinct_.push_back(0);
  }

  std::size_t size() const { return guard_.size(); }
  std::span<const Symbol> word() const { return guard_.word(); }

  // Largest letter allowed next.
  unsigned max_next() const { return std::min(distinct_.back(), alphabet_ - 1); }

  bool push(Symbol s) {
    if (guard_.push(s)) {
      guard_.pop();
      return false;
    }
    const auto w = guard_.word();
    const std::size_t len = w.size();
    if (len > pp_.max()) {
      const std::size_t i = len - 1 - pp_.max();
      bool ok = false;
      for (std::size_t p : pp_) {
        if (w[i] == w[i + p]) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        guard_.pop();
        return false;
      }
    }
    distinct_.push_back(std::max<unsigned>(distinct_.back(), s + 1u));
    return true;
  }

  void pop() {
    guard_.pop();
    distinct_.pop_back();
  }

 private:
  const PpTuple& pp_;
  SuffixPowerGuard guard_;
  unsigned alphabet_;
  std::vector<unsigned> distinct_;  // distinct_[len] = letters used by the prefix of length len
};

struct Best {
  std::size_t length = 0;
  std::vector<Symbol> word;
  bool capped = false;
};

// Depth-first search below the walker's current word.
void explore(TreeWalker& tw, std::size_t cap, Best& best) {
  const std::size_t base = tw.size();
  if (base > best.length) {
    best.length = base;
    best.word.assign(tw.word().begin(), tw.word().end());
  }
  if (base >= cap) {
    best.capped = true;
    return;
  }
  std::vector<unsigned> next{0};
  while (!next.empty()) {
    unsigned& c = next.back();
    if (c > tw.max_next()) {
      next.pop_back();
      if (tw.size() > base) tw.pop();
      continue;
    }
    const auto s = static_cast<Symbol>(c++);
    if (!tw.push(s)) continue;
    const std::size_t len = tw.size();
    if (len > best.length) {
      best.length = len;
      best.word.assign(tw.word().begin(), tw.word().end());
    }
    if (len >= cap) {
      best.capped = true;
      return;
    }
    next.push_back(0);
  }
}

void validate(const SearchSpec& spec) {
  if (spec.alphabet_size < 2 || spec.alphabet_size > 256) {
    throw std::invalid_argument("alphabet size must be in [2, 256]");
  }
  if (spec.depth_cap < spec.pp.max()) throw std::invalid_argument("depth cap must be at least max(pp)");
}

}  // namespace

std::string_view verdict_name(SearchVerdict v) {
  return v == SearchVerdict::FiniteTree ? "finite_tree" : "cap_exceeded";
}

SearchOutcome longest_constrained_word(const SearchSpec& spec, unsigned threads) {
  validate(spec);
  const auto finish = [&](Best best) {
    return SearchOutcome{best.capped ? SearchVerdict::CapExceeded : SearchVerdict::FiniteTree, best.length,
                         Word(std::move(best.word), spec.alphabet_size)};
  };

  if (threads <= 1) {
    TreeWalker tw(spec.pp, spec.forbidden, spec.alphabet_size);
    Best best;
    explore(tw, spec.depth_cap, best);
    return finish(std::move(best));
  }

  // Expand breadth-first until there is enough independent work, then hand
  // the frontier (in lexicographic order) to the workers.
  Best shallow;
  std::vector<std::vector<Symbol>> frontier{{}};
  const std::size_t wanted = 16 * static_cast<std::size_t>(threads);
  while (!frontier.empty() && frontier.size() < wanted && frontier.front().size() + 1 < spec.depth_cap &&
         frontier.front().size() < 48) {
    std::vector<std::vector<Symbol>> children;
    for (const auto& root : frontier) {
      TreeWalker tw(spec.pp, spec.forbidden, spec.alphabet_size);
      for (Symbol s : root) tw.push(s);
      for (unsigned c = 0; c <= tw.max_next(); ++c) {
        if (!tw.push(static_cast<Symbol>(c))) continue;
        children.emplace_back(tw.word().begin(), tw.word().end());
        tw.pop();
      }
    }
    if (!children.empty()) {
      shallow.length = children.front().size();
      shallow.word = children.front();
    }
    frontier = std::move(children);
  }
  if (frontier.empty()) return finish(std::move(shallow));

  std::vector<Best> results(frontier.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t job; (job = next.fetch_add(1)) < frontier.size();) {
          TreeWalker tw(spec.pp, spec.forbidden, spec.alphabet_size);
          for (Symbol s : frontier[job]) tw.push(s);
          explore(tw, spec.depth_cap, results[job]);
        }
      });
    }
  }

  Best best = std::move(shallow);
  for (auto& r : results) {
    if (r.capped) return finish(std::move(r));
    if (r.length > best.length) best = std::move(r);
  }
  return finish(std::move(best));
}

// ---------------------------------------------------------------------------

ConstructionReport verify_construction(const Morphism& m, const Word& base, const PpTuple& pp,
                                       const Exponent& free_at, std::size_t prefix_len) {
  if (prefix_len < 10 * pp.max()) {
    throw std::invalid_argument("prefix length must be at least 10 max(pp)");
  }
  const Word image = apply_morphism(m, base);
  if (image.size() < prefix_len) throw std::invalid_argument("base word too short for the requested prefix");
  const Word prefix = image.prefix(prefix_len);
  ConstructionReport report;
  report.prefix_length = prefix_len;
  report.pp = pp;
  report.free_at = free_at;
  report.pp_violation = first_violation(prefix, pp);
  report.power_witness = contains_power_at_least(prefix, free_at);
  return report;
}

namespace {

std::size_t shortest_image(const Morphism& m) {
  std::size_t shortest = m.image(0).size();
  for (std::size_t s = 1; s < m.domain_size(); ++s) {
    shortest = std::min(shortest, m.image(static_cast<Symbol>(s)).size());
  }
  return shortest;
}

}  // namespace

ConstructionReport verify_construction(const Morphism& m, std::string_view base_sequence, const PpTuple& pp,
                                       const Exponent& free_at, std::size_t prefix_len) {
  const std::size_t base_len = prefix_len / shortest_image(m) + 1;
  return verify_construction(m, named_sequence(base_sequence, base_len), pp, free_at, prefix_len);
}

bool ResidueReport::passed() const {
  if (power_witness) return false;
  return std::none_of(samples.begin(), samples.end(), [](const auto& s) { return s.pp_violation.has_value(); });
}

ResidueReport verify_residue_class(const Morphism& m, std::size_t i, std::size_t n,
                                   const std::vector<std::size_t>& samples, std::size_t prefix_len) {
  if (n == 0 || m.uniform_length() != n) {
    throw std::invalid_argument("morphism is not " + std::to_string(n) + "-uniform");
  }
  for (std::size_t a : samples) {
    if (a < 2 || a % n != i % n) {
      throw std::invalid_argument("sample " + std::to_string(a) + " is not in the class " + std::to_string(i) +
                                  " mod " + std::to_string(n));
    }
  }
  const Word prefix = apply_morphism(m, named_sequence("t", prefix_len / n + 1)).prefix(prefix_len);
  ResidueReport report;
  report.prefix_length = prefix.size();
  for (std::size_t a : samples) {
    report.samples.push_back({a, first_violation(prefix, PpTuple({1, a}))});
  }
  report.power_witness = contains_power_at_least(prefix, Exponent(3, 1, true));
  return report;
}

// ---------------------------------------------------------------------------

Word generate_threshold_word(unsigned k, const Exponent& threshold, std::size_t target_len, std::uint64_t cap) {
  if (k < 2 || k > 256) throw std::invalid_argument("alphabet size must be in [2, 256]");
  SuffixPowerGuard guard(Exponent(threshold.numerator(), threshold.denominator(), true));
  std::vector<unsigned> distinct{0};
  std::vector<unsigned> next{0};
  std::uint64_t attempts = 0;
  while (guard.size() < target_len) {
    if (next.empty()) throw SearchExhausted("no " + threshold.str() + "+-free word of that length");
    unsigned& c = next.back();
    if (c > std::min(distinct.back(), k - 1)) {
      next.pop_back();
      if (guard.size() > 0) {
        guard.pop();
        distinct.pop_back();
      }
      continue;
    }
    if (++attempts > cap) throw SearchExhausted("backtracking budget exhausted");
    const auto s = static_cast<Symbol>(c++);
    if (guard.push(s)) {
      guard.pop();
      continue;
    }
    distinct.push_back(std::max<unsigned>(distinct.back(), s + 1u));
    next.push_back(0);
  }
  const auto w = guard.word();
  return Word(std::vector<Symbol>(w.begin(), w.end()), k);
}

// ---------------------------------------------------------------------------

Morphism parse_prefixed_uniform(std::string_view text, std::size_t* uniform_length, Word* prefix) {
  std::size_t declared = 0;
  std::string p;
  std::map<unsigned, std::string> suffixes;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(line_no, "expected 'KEY VALUE'");
    const auto key = line.substr(0, space);
    const auto value = line.substr(space + 1);
    if (key == "uniform") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), declared);
      if (ec != std::errc{} || ptr != value.data() + value.size() || declared == 0) {
        throw ParseError(line_no, "bad uniform length");
      }
    } else if (key == "prefix") {
      p = std::string(value);
    } else {
      unsigned letter = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), letter);
      if (ec != std::errc{} || ptr != key.data() + key.size()) throw ParseError(line_no, "bad letter");
      if (!suffixes.emplace(letter, std::string(value)).second) throw ParseError(line_no, "duplicate letter");
    }
  }
  if (declared == 0) throw ParseError(line_no, "missing 'uniform' line");
  if (suffixes.empty()) throw ParseError(line_no, "no images");
  const auto digits = [&](const std::string& text) {
    std::vector<Symbol> out;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError(line_no, "images must be decimal digits");
      out.push_back(static_cast<Symbol>(ch - '0'));
    }
    return out;
  };
  std::vector<std::vector<Symbol>> raw;
  for (const auto& [letter, suffix] : suffixes) {
    if (letter != raw.size()) throw ParseError(line_no, "letters must be 0, 1, 2, ...");
    const std::string image = p + suffix;
    if (image.size() != declared) {
      throw std::runtime_error("transcription checksum mismatch: image of " + std::to_string(letter) + " has length " +
                               std::to_string(image.size()) + ", expected " + std::to_string(declared));
    }
    raw.push_back(digits(image));
  }
  unsigned target = 1;
  for (const auto& w : raw) {
    for (Symbol s : w) target = std::max(target, s + 1u);
  }
  if (uniform_length) *uniform_length = declared;
  if (prefix) *prefix = Word(digits(p), target);
  std::vector<Word> images;
  for (auto& w : raw) images.emplace_back(std::move(w), target);
  return Morphism(std::move(images));
}

const std::vector<std::string>& large_alphabet_theorem_names() {
  static const std::vector<std::string> names{"18_37", "4_10", "9_19"};
  return names;
}

UniformTheoremData large_alphabet_theorem(std::string_view which) {
  struct Params {
    unsigned base_alphabet;
    Exponent base_threshold;
    Exponent image_threshold;
    std::vector<std::size_t> pp;
  };
  static const std::map<std::string, Params, std::less<>> params{
      {"18_37", {4, Exponent(7, 5, true), Exponent(7, 4, true), {18, 37}}},
      {"4_10", {4, Exponent(7, 5, true), Exponent(3, 2, true), {4, 10}}},
      {"9_19", {5, Exponent(5, 4, true), Exponent(4, 3, true), {9, 19}}},
  };
  const auto it = params.find(which);
  if (it == params.end()) throw std::invalid_argument("unknown theorem '" + std::string(which) + "'");
  std::size_t uniform = 0;
  Word prefix;
  Morphism m = parse_prefixed_uniform(detail::embedded_file("theorems/" + std::string(which) + ".txt"), &uniform,
                                      &prefix);
  if (m.domain_size() != it->second.base_alphabet) {
    throw std::runtime_error("theorem data has the wrong number of letters");
  }
  return UniformTheoremData{std::string(which),       uniform,
                            std::move(prefix),        std::move(m),
                            it->second.base_alphabet, it->second.base_threshold,
                            it->second.image_threshold, PpTuple(it->second.pp)};
}

TheoremReport verify_large_alphabet_theorem(std::string_view which, std::size_t base_len) {
  const UniformTheoremData data = large_alphabet_theorem(which);
  TheoremReport report;
  report.name = data.name;
  report.base = generate_threshold_word(data.base_alphabet, data.base_threshold, base_len);
  const Word image = apply_morphism(data.morphism, report.base);
  report.image_length = image.size();
  report.pp_violation = first_violation(image, data.pp);
  report.power_witness = contains_power_at_least(image, data.image_threshold);

  const auto s = image.symbols();
  const auto p = data.prefix.symbols();
  for (auto it = std::search(s.begin(), s.end(), p.begin(), p.end()); it != s.end();
       it = std::search(it + 1, s.end(), p.begin(), p.end())) {
    const auto pos = static_cast<std::size_t>(it - s.begin());
    if (pos % data.uniform_length != 0) {
      report.stray_prefix = pos;
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kMorphismDir = "morphisms/";
constexpr std::string_view kMorphismExt = ".txt";

}  // namespace

Morphism shipped_morphism(std::string_view name) {
  if (name == "a45") name = "res_4_5";
  const std::string file = std::string(kMorphismDir) + std::string(name) + std::string(kMorphismExt);
  try {
    return Morphism::parse(detail::embedded_file(file));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("no shipped morphism named '" + std::string(name) + "'");
  }
}

std::vector<std::string> shipped_morphism_names() {
  std::vector<std::string> names;
  for (auto file : detail::embedded_names(kMorphismDir)) {
    file.remove_prefix(kMorphismDir.size());
    if (file.ends_with(kMorphismExt)) file.remove_suffix(kMorphismExt.size());
    names.emplace_back(file);
  }
  return names;
}

std::vector<ResidueRow> residue_table() {
  std::vector<ResidueRow> rows;
  for (const auto& name : shipped_morphism_names()) {
    std::size_t i = 0;
    std::size_t n = 0;
    if (std::sscanf(name.c_str(), "res_%zu_%zu", &i, &n) == 2) rows.push_back({i, n, name});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return std::tie(x.n, x.i) < std::tie(y.n, y.i); });
  return rows;
}

}  // namespace ppw
