#include "ppw/automata.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <regex>
#include <sstream>

#include "embedded_data.hpp"

namespace ppw {

TupleDfa::TupleDfa(unsigned arity, std::vector<bool> accepting, std::vector<std::int32_t> transitions)
    : arity_(arity), columns_(1u << arity), accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  if (arity_ == 0 || arity_ > 16) throw std::invalid_argument("arity must be in [1, 16]");
  if (accepting_.empty()) throw std::invalid_argument("automaton needs at least one state");
  if (transitions_.size() != accepting_.size() * columns_) {
    throw std::invalid_argument("transition table has the wrong size");
  }
  for (auto target : transitions_) {
    if (target != kDead && (target < 0 || static_cast<std::size_t>(target) >= accepting_.size())) {
      throw std::invalid_argument("transition to a nonexistent state");
    }
  }
}

std::size_t TupleDfa::transition_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(transitions_.begin(), transitions_.end(), [](auto t) { return t != kDead; }));
}

unsigned TupleDfa::column_of(std::span<const unsigned> digits) const {
  if (digits.size() != arity_) throw std::invalid_argument("digit column has the wrong arity");
  unsigned column = 0;
  for (unsigned d : digits) {
    if (d > 1) throw std::invalid_argument("digit outside base 2");
    column = (column << 1) | d;
  }
  return column;
}

std::int32_t TupleDfa::next(std::size_t state, std::span<const unsigned> digits) const {
  return next_by_column(state, column_of(digits));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool read_uint(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

TupleDfa parse_walnut_dfa(std::string_view text) {
  struct PendingTarget {
    std::size_t index;
    std::uint64_t target;
    std::size_t line;
  };

  unsigned arity = 0;
  bool have_header = false;
  std::vector<bool> accepting;
  std::vector<std::int32_t> transitions;
  std::vector<PendingTarget> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    const auto tokens = split_ws(line);

    if (!have_header) {
      for (auto tag : tokens) {
        if (tag != "msd_2") {
          throw ParseError(line_no, "malformed header: unsupported numeration '" + std::string(tag) + "'");
        }
      }
      arity = static_cast<unsigned>(tokens.size());
      if (arity > 16) throw ParseError(line_no, "malformed header: too many components");
      have_header = true;
      continue;
    }

    const auto arrow = std::find(tokens.begin(), tokens.end(), "->");
    if (arrow == tokens.end()) {
      // state block header: ID ACCEPT
      std::uint64_t id = 0;
      std::uint64_t acc = 0;
      if (tokens.size() != 2 || !read_uint(tokens[0], id) || !read_uint(tokens[1], acc) || acc > 1) {
        throw ParseError(line_no, "expected 'STATE ACCEPT' with ACCEPT in {0, 1}");
      }
      if (id < accepting.size()) throw ParseError(line_no, "duplicate state block " + std::to_string(id));
      if (id != accepting.size()) {
        throw ParseError(line_no, "state ids must be contiguous from 0; expected " +
                                      std::to_string(accepting.size()) + ", got " + std::to_string(id));
      }
      accepting.push_back(acc == 1);
      transitions.resize(accepting.size() << arity, TupleDfa::kDead);
      continue;
    }

    if (accepting.empty()) throw ParseError(line_no, "transition before any state block");
    const auto ndigits = static_cast<std::size_t>(arrow - tokens.begin());
    if (ndigits != arity) {
      throw ParseError(line_no, "expected " + std::to_string(arity) + " digits, got " + std::to_string(ndigits));
    }
    if (tokens.end() - arrow != 2) throw ParseError(line_no, "expected exactly one target after '->'");
    unsigned column = 0;
    for (std::size_t i = 0; i < ndigits; ++i) {
      std::uint64_t d = 0;
      if (!read_uint(tokens[i], d)) throw ParseError(line_no, "bad digit '" + std::string(tokens[i]) + "'");
      if (d >= 2) throw ParseError(line_no, "digit " + std::to_string(d) + " out of base 2");
      column = (column << 1) | static_cast<unsigned>(d);
    }
    std::uint64_t target = 0;
    if (!read_uint(*(arrow + 1), target) || target > 0x7fffffff) {
      throw ParseError(line_no, "bad target state '" + std::string(*(arrow + 1)) + "'");
    }
    const std::size_t index = ((accepting.size() - 1) << arity) + column;
    if (transitions[index] != TupleDfa::kDead) throw ParseError(line_no, "duplicate transition");
    transitions[index] = static_cast<std::int32_t>(target);
    pending.push_back({index, target, line_no});
  }

  if (!have_header) throw ParseError(line_no, "malformed header: empty input");
  if (accepting.empty()) throw ParseError(line_no, "no states");
  for (const auto& p : pending) {
    if (p.target >= accepting.size()) {
      throw ParseError(p.line, "dangling target state " + std::to_string(p.target));
    }
  }
  return TupleDfa(arity, std::move(accepting), std::move(transitions));
}

std::string_view triple_automaton_text() { return detail::embedded_file("triple.dfa"); }

const TupleDfa& triple_automaton() {
  static const TupleDfa dfa = parse_walnut_dfa(triple_automaton_text());
  return dfa;
}

bool dfa_accepts(const TupleDfa& dfa, std::span<const std::uint64_t> tuple) {
  if (tuple.size() != dfa.arity()) {
    throw std::invalid_argument("tuple has " + std::to_string(tuple.size()) + " components, automaton reads " +
                                std::to_string(dfa.arity()));
  }
  int length = 0;
  for (auto v : tuple) length = std::max(length, static_cast<int>(std::bit_width(v)));
  std::int32_t state = 0;
  for (int bit = length - 1; bit >= 0; --bit) {
    unsigned column = 0;
    for (auto v : tuple) column = (column << 1) | static_cast<unsigned>((v >> bit) & 1u);
    state = dfa.next_by_column(static_cast<std::size_t>(state), column);
    if (state == TupleDfa::kDead) return false;
  }
  return dfa.accepting(static_cast<std::size_t>(state));
}

namespace {

// States from which some accepting state is reachable.
std::vector<bool> live_states(const TupleDfa& dfa) {
  std::vector<bool> live(dfa.state_count());
  for (std::size_t s = 0; s < dfa.state_count(); ++s) live[s] = dfa.accepting(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < dfa.state_count(); ++s) {
      if (live[s]) continue;
      for (unsigned c = 0; c < dfa.columns(); ++c) {
        const auto t = dfa.next_by_column(s, c);
        if (t != TupleDfa::kDead && live[static_cast<std::size_t>(t)]) {
          live[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return live;
}

struct Enumerator {
  const TupleDfa& dfa;
  const std::vector<bool>& live;
  std::uint64_t bound;
  int length;
  std::vector<std::uint64_t> values;
  std::vector<std::vector<std::uint64_t>>& out;

  void walk(std::size_t state, int depth) {
    if (depth == length) {
      if (dfa.accepting(state)) out.push_back(values);
      return;
    }
    const int remaining = length - depth - 1;
    const unsigned first_column = depth == 0 ? 1 : 0;  // shortest representation
    for (unsigned column = first_column; column < dfa.columns(); ++column) {
      const auto target = dfa.next_by_column(state, column);
      if (target == TupleDfa::kDead || !live[static_cast<std::size_t>(target)]) continue;
      const auto saved = values;
      bool within = true;
      for (unsigned j = 0; j < dfa.arity(); ++j) {
        const unsigned bit = (column >> (dfa.arity() - 1 - j)) & 1u;
        values[j] = (values[j] << 1) | bit;
        if ((values[j] << remaining) > bound) within = false;
      }
      if (within) walk(static_cast<std::size_t>(target), depth + 1);
      values = saved;
    }
  }
};

}  // namespace

std::vector<std::vector<std::uint64_t>> dfa_enumerate(const TupleDfa& dfa, std::uint64_t bound) {
  if (bound >= (std::uint64_t{1} << 40)) throw std::invalid_argument("enumeration bound too large");
  std::vector<std::vector<std::uint64_t>> out;
  if (dfa.accepting(0)) out.emplace_back(dfa.arity(), 0);  // the all-zero tuple: empty input
  const auto live = live_states(dfa);
  const int max_length = std::bit_width(bound);
  for (int length = 1; length <= max_length; ++length) {
    Enumerator e{dfa, live, bound, length, std::vector<std::uint64_t>(dfa.arity(), 0), out};
    e.walk(0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool shev_cond(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a < 1 || b <= a || c <= b) return false;
  const std::uint64_t x = b - a;
  return std::has_single_bit(x) && c - a == 2 * x;
}

DistancePredicates tm_distance_predicates(std::uint64_t n) {
  static const std::regex parta("0*11*0*|0*1(00)*10*|0*10110*");
  static const std::regex partb("0*100*10*|0*11*0*");
  if (n == 0) return {false, false};
  std::string bits;
  for (int b = std::bit_width(n) - 1; b >= 0; --b) bits.push_back(((n >> b) & 1u) ? '1' : '0');
  return {std::regex_match(bits, parta), std::regex_match(bits, partb)};
}

bool vtm_triple_predicate(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a < 1 || b <= a || c <= b) return false;
  const auto p = [](unsigned e) { return std::uint64_t{1} << e; };
  // every family member has c >= 2^{2i+2j+2} or so; 2i, 2j stay below bit_width(c)
  const unsigned limit = static_cast<unsigned>(std::bit_width(c)) + 2;
  for (unsigned i = 0; 2 * i + 4 < 63 && 2 * i <= limit; ++i) {
    for (unsigned j = 0; 2 * i + 2 * j + 4 < 63 && 2 * j <= limit; ++j) {
      const bool f1 = a == (p(2 * i + 1) - 1) * p(2 * j + 1) && b == (p(2 * i + 2) - 1) * p(2 * j) &&
                      c == p(2 * i + 2 * j + 2);
      const bool f2 = a == 3 * p(2 * j) && b == (p(2 * i + 2) + 1) * p(2 * j + 1) &&
                      c == (p(2 * i + 1) + 1) * p(2 * j + 2);
      const bool f3 = a == p(2 * i + 2 * j + 3) && b == (p(2 * i + 3) + 1) * p(2 * j) &&
                      c == (p(2 * i + 2) + 1) * p(2 * j + 1);
      if (f1 || f2 || f3) return true;
    }
  }
  return false;
}

}  // namespace ppw
