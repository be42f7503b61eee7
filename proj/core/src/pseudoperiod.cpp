#include "ppw/pseudoperiod.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <atomic>
#include <thread>
#include <limits>
#include <unordered_set>

namespace ppw {

PpTuple::PpTuple(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("pseudoperiod tuple must be nonempty");
  if (entries_.front() == 0) throw std::invalid_argument("pseudoperiod entries must be positive");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] <= entries_[i - 1]) {
      throw std::invalid_argument("pseudoperiod entries must be strictly increasing");
    }
  }
}

PpTuple PpTuple::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed tuple '" + std::string(text) + "'"); };
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw fail();
    t = t.substr(1, t.size() - 2);
  }
  std::vector<std::size_t> entries;
  while (!t.empty()) {
    const auto comma = t.find(',');
    std::string_view item = t.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) throw fail();
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    t.remove_prefix(comma + 1);
    if (t.empty()) throw fail();
  }
  return PpTuple(std::move(entries));
}

bool PpTuple::contains(std::size_t p) const {
  return std::binary_search(entries_.begin(), entries_.end(), p);
}

std::string PpTuple::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  out.push_back(')');
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool satisfied_at(std::span<const Symbol> w, std::span<const std::size_t> t, std::size_t i) {
  for (std::size_t p : t) {
    if (w[i] == w[i + p]) return true;
  }
  return false;
}

// masks[p] has bit i set iff i < n - p and w[i] == w[i + p]. A tuple with
// maximum m is a pseudoperiod iff the union of its masks covers [0, n - m).
class ShiftMasks {
 public:
  ShiftMasks(const Word& w, std::size_t bound)
      : n_(w.size()), words_((n_ + 63) / 64), masks_((bound + 1) * words_, 0) {
    const auto s = w.symbols();
    for (std::size_t p = 1; p <= bound && p < n_; ++p) {
      std::uint64_t* mask = row(p);
      for (std::size_t i = 0; i + p < n_; ++i) {
        if (s[i] == s[i + p]) mask[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    // suffix unions: reach_[p] = OR of masks q >= p
    reach_.assign((bound + 2) * words_, 0);
    for (std::size_t p = bound; p >= 1; --p) {
      for (std::size_t j = 0; j < words_; ++j) {
        reach_[p * words_ + j] = reach_[(p + 1) * words_ + j] | row(p)[j];
      }
    }
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(std::size_t p) const { return masks_.data() + p * words_; }
  const std::uint64_t* reach(std::size_t p) const { return reach_.data() + p * words_; }

  // Does acc | extra cover the bit range [0, limit)?
  bool covers(const std::uint64_t* acc, const std::uint64_t* extra, std::size_t limit) const {
    const std::size_t full = limit / 64;
    for (std::size_t j = 0; j < full; ++j) {
      if (~(acc[j] | extra[j]) != 0) return false;
    }
    if (const std::size_t rest = limit % 64; rest != 0) {
      const std::uint64_t need = (std::uint64_t{1} << rest) - 1;
      if (((acc[full] | extra[full]) & need) != need) return false;
    }
    return true;
  }

 private:
  std::uint64_t* row(std::size_t p) { return masks_.data() + p * words_; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> reach_;
};

// Depth-first search over k-subsets of [first_lo, first_hi] x ... in
// lexicographic order. The visitor returns false to stop the search.
class SubsetSearch {
 public:
  SubsetSearch(const ShiftMasks& masks, std::size_t k, std::size_t bound)
      : masks_(masks), k_(k), bound_(bound), acc_((k + 1) * masks.words(), 0), chosen_(k) {}

  // Returns false if the visitor stopped the search.
  bool run(std::size_t first_lo, std::size_t first_hi,
           const std::function<bool(std::span<const std::size_t>)>& visit) {
    visit_ = &visit;
    return descend(0, first_lo, first_hi);
  }

 private:
  bool descend(std::size_t depth, std::size_t lo, std::size_t hi) {
    const std::size_t n = masks_.length();
    const std::size_t words = masks_.words();
    const std::uint64_t* acc = acc_.data() + depth * words;
    for (std::size_t p = lo; p <= hi; ++p) {
      // every tuple must cover [0, n - bound) no matter which elements follow
      const std::size_t floor_limit = n > bound_ ? n - bound_ : 0;
      if (!masks_.covers(acc, masks_.reach(p), floor_limit)) return true;
      chosen_[depth] = p;
      if (depth + 1 == k_) {
        const std::size_t limit = n > p ? n - p : 0;
        if (masks_.covers(acc, masks_.row(p), limit)) {
          if (!(*visit_)(chosen_)) return false;
        }
        continue;
      }
      std::uint64_t* next = acc_.data() + (depth + 1) * words;
      const std::uint64_t* mask = masks_.row(p);
      for (std::size_t j = 0; j < words; ++j) next[j] = acc[j] | mask[j];
      if (!descend(depth + 1, p + 1, bound_ - (k_ - depth - 2))) return false;
    }
    return true;
  }

  const ShiftMasks& masks_;
  std::size_t k_;
  std::size_t bound_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::size_t> chosen_;
  const std::function<bool(std::span<const std::size_t>)>* visit_ = nullptr;
};

std::vector<PpTuple> enumerate_range(const ShiftMasks& masks, std::size_t k, std::size_t bound,
                                     std::size_t first_lo, std::size_t first_hi) {
  std::vector<PpTuple> out;
  SubsetSearch search(masks, k, bound);
  search.run(first_lo, first_hi, [&](std::span<const std::size_t> t) {
    out.emplace_back(std::vector<std::size_t>(t.begin(), t.end()));
    return true;
  });
  return out;
}

}  // namespace

bool is_pseudoperiod(const Word& w, const PpTuple& t) { return !first_violation(w, t).has_value(); }

std::optional<std::size_t> first_violation(const Word& w, const PpTuple& t) {
  if (w.size() <= t.max()) return std::nullopt;
  const auto s = w.symbols();
  const std::size_t limit = w.size() - t.max();
  for (std::size_t i = 0; i < limit; ++i) {
    if (!satisfied_at(s, t.entries(), i)) return i;
  }
  return std::nullopt;
}

bool is_pseudoperiod_by_factors(const Word& w, const PpTuple& t) {
  const std::size_t window = t.max() + 1;
  if (w.size() < window) return true;
  std::unordered_set<std::string> seen;
  const auto s = w.symbols();
  for (std::size_t i = 0; i + window <= w.size(); ++i) {
    std::string key(reinterpret_cast<const char*>(s.data() + i), window);
    if (!seen.insert(std::move(key)).second) continue;
    if (!satisfied_at(s, t.entries(), i)) return false;
  }
  return true;
}

std::size_t subset_count(std::size_t bound, std::size_t k) {
  if (k > bound) return 0;
  k = std::min(k, bound - k);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (bound - k + i) / i;
    if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

std::vector<PpTuple> enumerate_pseudoperiods(const Word& w, std::size_t k, std::size_t bound,
                                             unsigned threads) {
  if (k == 0) throw std::invalid_argument("tuple size must be at least 1");
  if (bound < k) throw std::invalid_argument("bound must be at least the tuple size");
  const ShiftMasks masks(w, bound);
  const std::size_t last_first = bound - k + 1;
  if (threads <= 1 || last_first < 2) return enumerate_range(masks, k, bound, 1, last_first);

  // workers claim smallest elements; results are merged in element order
  std::vector<std::vector<PpTuple>> done(last_first + 1);
  std::atomic<std::size_t> next{1};
  auto worker = [&] {
    for (std::size_t first = next++; first <= last_first; first = next++) {
      done[first] = enumerate_range(masks, k, bound, first, first);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::vector<PpTuple> out;
  for (auto& part : done) {
    for (auto& t : part) out.push_back(std::move(t));
  }
  return out;
}

std::optional<PpTuple> find_pseudoperiod(const Word& w, std::size_t k, std::size_t bound) {
  if (k == 0) throw std::invalid_argument("tuple size must be at least 1");
  if (bound < k) return std::nullopt;
  const ShiftMasks masks(w, bound);
  std::optional<PpTuple> found;
  SubsetSearch search(masks, k, bound);
  search.run(1, bound - k + 1, [&](std::span<const std::size_t> t) {
    found.emplace(std::vector<std::size_t>(t.begin(), t.end()));
    return false;
  });
  return found;
}

std::optional<std::size_t> min_pseudoperiod_size(const Word& w, std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be at least 1");
  for (std::size_t k = 1; k <= bound; ++k) {
    if (find_pseudoperiod(w, k, bound)) return k;
  }
  return std::nullopt;
}

std::size_t max_gap(const Word& w) {
  if (w.size() < 2) throw std::domain_error("max_gap needs a word of length at least 2");
  std::vector<std::size_t> last(w.alphabet_size(), std::numeric_limits<std::size_t>::max());
  std::size_t gap = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& prev = last[w[i]];
    if (prev != std::numeric_limits<std::size_t>::max()) gap = std::max(gap, i - prev);
    prev = i;
  }
  return gap;
}

PpTuple run_length_tuple(const Word& w) {
  if (std::any_of(w.begin(), w.end(), [](Symbol s) { return s > 1; })) {
    throw std::domain_error("run_length_tuple needs a binary word");
  }
  const auto r = runs(w);
  if (r.size() < 2) throw std::domain_error("run_length_tuple needs at least two runs");
  std::size_t longest = 0;
  for (std::size_t i = 1; i < r.size(); ++i) longest = std::max(longest, r[i].length);
  std::vector<std::size_t> entries(longest + 1);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = i + 1;
  return PpTuple(std::move(entries));
}

bool matches_pp12_form(const Word& w) {
  if (w.empty()) return true;
  const Symbol a = w[0];
  std::size_t j = 0;
  while (j < w.size() && w[j] == a) ++j;
  if (j == w.size()) return true;  // unary
  const Symbol b = w[j];
  // from j-1 on the word alternates a, b, a, b, ...
  for (std::size_t i = j - 1; i < w.size(); ++i) {
    if (w[i] != ((i - (j - 1)) % 2 == 0 ? a : b)) return false;
  }
  return true;
}

}  // namespace ppw
