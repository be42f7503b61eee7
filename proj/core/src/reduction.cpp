#include "ppw/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ppw {

void HittingSetInstance::validate() const {
  if (sets.empty()) throw std::invalid_argument("need at least one set");
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("sets must be nonempty");
    for (auto e : s) {
      if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1, n]");
    }
  }
  if (k_prime < 1 || k_prime > n) throw std::invalid_argument("k' must be in [1, n]");
}

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

}  // namespace

HittingSetInstance HittingSetInstance::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty instance");
  HittingSetInstance h;
  std::size_t m = 0;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> h.n >> m >> h.k_prime) || (head >> extra)) throw ParseError(1, "expected \"n m k'\"");
  }
  if (lines.size() != m + 1) {
    throw ParseError(lines.size(), "expected " + std::to_string(m) + " set lines, found " +
                                       std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    std::vector<std::size_t> set;
    for (std::size_t e; row >> e;) set.push_back(e);
    if (!row.eof()) throw ParseError(i + 1, "bad element");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    h.sets.push_back(std::move(set));
  }
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  return h;
}

std::string HittingSetInstance::str() const {
  std::ostringstream out;
  out << n << ' ' << sets.size() << ' ' << k_prime << '\n';
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

PseudoperiodInstance PseudoperiodInstance::parse(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) throw ParseError(lines.size(), "expected a word line and a 'k B' line");
  PseudoperiodInstance inst;
  inst.x = parse_word(lines[0]).word;
  std::istringstream tail(lines[1]);
  std::string extra;
  if (!(tail >> inst.k >> inst.bound) || (tail >> extra)) throw ParseError(2, "expected 'k B'");
  if (inst.k < 1 || inst.bound < inst.k) throw ParseError(2, "need 1 <= k <= B");
  return inst;
}

std::string PseudoperiodInstance::str() const {
  return x.str() + '\n' + std::to_string(k) + ' ' + std::to_string(bound) + '\n';
}

PseudoperiodInstance build_pp_instance(const HittingSetInstance& h) {
  h.validate();
  const std::size_t n = h.n;
  std::vector<Symbol> x;
  const auto put = [&x](std::string_view bits) {
    for (char c : bits) x.push_back(c == '1' ? 1 : 0);
  };
  const auto zeros = [&x](std::size_t count) { x.insert(x.end(), count, 0); };

  put("11");
  zeros(4 * n + 3);
  put("101");
  zeros(4 * n + 3);
  put("1001");
  zeros(4 * n + 3);
  for (const auto& s : h.sets) {
    put("1");
    for (std::size_t l = 1; l <= n; ++l) {
      put("000");
      put(std::find(s.begin(), s.end(), l) != s.end() ? "1" : "0");
    }
    put("0000");
    for (std::size_t j = 0; j < n; ++j) put("0011");
    put("0");
  }
  return PseudoperiodInstance{Word(std::move(x), 2), h.k_prime + 4, 4 * n + 5};
}

std::optional<PpTuple> solve_pseudoperiod(const PseudoperiodInstance& inst, const SolverLimits& limits) {
  if (inst.k < 1 || inst.bound < inst.k) throw std::invalid_argument("need 1 <= k <= B");
  const std::size_t count = subset_count(inst.bound, inst.k);
  if (count > limits.max_subsets) {
    throw ExplosionError("C(" + std::to_string(inst.bound) + ", " + std::to_string(inst.k) + ") = " +
                         std::to_string(count) + " subsets exceeds the limit of " +
                         std::to_string(limits.max_subsets));
  }
  return find_pseudoperiod(inst.x, inst.k, inst.bound);
}

bool is_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& candidate) {
  return std::all_of(h.sets.begin(), h.sets.end(), [&](const auto& s) {
    return std::any_of(s.begin(), s.end(),
                       [&](auto e) { return std::find(candidate.begin(), candidate.end(), e) != candidate.end(); });
  });
}

std::optional<std::vector<std::size_t>> solve_hitting_set(const HittingSetInstance& h, const SolverLimits& limits) {
  h.validate();
  const std::size_t count = subset_count(h.n, h.k_prime);
  if (count > limits.max_subsets) {
    throw ExplosionError(std::to_string(count) + " subsets exceeds the limit of " +
                         std::to_string(limits.max_subsets));
  }
  // combinations of [1, n] in lexicographic order
  std::vector<std::size_t> c(h.k_prime);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i + 1;
  while (true) {
    if (is_hitting_set(h, c)) return c;
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == h.n - (c.size() - i)) --i;
    if (i == 0) return std::nullopt;
    ++c[i - 1];
    for (std::size_t j = i; j < c.size(); ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::size_t> extract_hitting_set(const HittingSetInstance& h, const PpTuple& solution) {
  h.validate();
  const std::size_t n = h.n;
  for (std::size_t forced : {std::size_t{1}, std::size_t{2}, std::size_t{3}, 4 * n + 4}) {
    if (!solution.contains(forced)) {
      throw StructuralError("solution " + solution.str() + " lacks the forced offset " + std::to_string(forced));
    }
  }
  std::vector<std::size_t> hs;
  for (std::size_t p : solution) {
    if (p >= 4 && p <= 4 * n && p % 4 == 0) hs.push_back(p / 4);
  }
  if (!is_hitting_set(h, hs)) {
    throw StructuralError("multiples of 4 in " + solution.str() + " do not hit every set");
  }
  for (std::size_t e = 1; e <= n && hs.size() < h.k_prime; ++e) {
    if (std::find(hs.begin(), hs.end(), e) == hs.end()) hs.push_back(e);
  }
  std::sort(hs.begin(), hs.end());
  return hs;
}

PpTuple pseudoperiod_from_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& hitting_set) {
  std::set<std::size_t> p{1, 2, 3, 4 * h.n + 4};
  for (auto e : hitting_set) p.insert(4 * e);
  return PpTuple(std::vector<std::size_t>(p.begin(), p.end()));
}

}  // namespace ppw
