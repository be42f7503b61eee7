#include "ppw/powers.hpp"

#include <algorithm>
#include <limits>

namespace ppw {

namespace {

void require_at_least_one(const Exponent& e) {
  if (e < Exponent(1)) throw std::domain_error("exponent threshold must be at least 1");
}

}  // namespace

std::optional<PowerWitness> contains_power_at_least(const Word& w, const Exponent& e) {
  require_at_least_one(e);
  const std::size_t n_total = w.size();
  const auto s = w.symbols();

  std::size_t best_start = std::numeric_limits<std::size_t>::max();
  std::size_t best_length = 0;

  for (std::size_t period = 1;; ++period) {
    const std::uint64_t length = e.min_length(period);
    if (length > n_total) break;
    // a factor [i, i + length) has period `period` iff the `need` matches
    // w[j] == w[j + period] hold for j in [i, i + need)
    const std::size_t need = length - period;
    std::size_t start = std::numeric_limits<std::size_t>::max();
    if (need == 0) {
      start = 0;
    } else {
      std::size_t run = 0;
      std::size_t last = n_total - period;
      if (best_start < last && best_start + need < last) last = best_start + need;
      for (std::size_t j = 0; j < last; ++j) {
        run = s[j] == s[j + period] ? run + 1 : 0;
        if (run == need) {
          start = j + 1 - need;
          break;
        }
      }
    }
    if (start < best_start || (start == best_start && length < best_length)) {
      best_start = start;
      best_length = length;
    }
  }
  if (best_start == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  const auto factor = s.subspan(best_start, best_length);
  return PowerWitness{best_start, best_length, smallest_period(factor)};
}

bool is_e_free(const Word& w, const Exponent& e) {
  return !contains_power_at_least(w, Exponent(e.numerator(), e.denominator(), false));
}

bool is_e_plus_free(const Word& w, const Exponent& e) {
  return !contains_power_at_least(w, Exponent(e.numerator(), e.denominator(), true));
}

Exponent critical_exponent(const Word& w) {
  if (w.empty()) throw std::domain_error("critical exponent of the empty word is undefined");
  const auto s = w.symbols();
  const std::size_t n_total = w.size();
  // best = best_len / best_period
  std::size_t best_len = 1;
  std::size_t best_period = 1;
  for (std::size_t period = 1; period < n_total; ++period) {
    // no factor with this period can beat n_total / period
    if (static_cast<unsigned __int128>(n_total) * best_period <=
        static_cast<unsigned __int128>(best_len) * period) {
      break;
    }
    std::size_t run = 0;
    std::size_t longest = 0;
    for (std::size_t j = 0; j + period < n_total; ++j) {
      run = s[j] == s[j + period] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    const std::size_t len = longest + period;
    if (static_cast<unsigned __int128>(len) * best_period >
        static_cast<unsigned __int128>(best_len) * period) {
      best_len = len;
      best_period = period;
    }
  }
  return Exponent(best_len, best_period);
}

// ---------------------------------------------------------------------------

SuffixPowerGuard::SuffixPowerGuard(Exponent threshold) : threshold_(threshold) {
  require_at_least_one(threshold_);
  min_length_.push_back(0);
}

bool SuffixPowerGuard::push(Symbol symbol) {
  word_.push_back(symbol);
  const std::size_t len = word_.size();
  const Symbol* w = word_.data();
  for (std::size_t period = 1;; ++period) {
    if (period >= min_length_.size()) min_length_.push_back(threshold_.min_length(period));
    const std::size_t need_len = min_length_[period];
    if (need_len > len) return false;
    // does the suffix of length need_len have this period?
    const std::size_t need = need_len - period;
    std::size_t j = 0;
    const Symbol* tail = w + len - 1;
    while (j < need && tail[-static_cast<std::ptrdiff_t>(j)] ==
                           tail[-static_cast<std::ptrdiff_t>(j + period)]) {
      ++j;
    }
    if (j == need) return true;
  }
}

void SuffixPowerGuard::pop() {
  if (word_.empty()) throw std::logic_error("pop on empty word");
  word_.pop_back();
}

}  // namespace ppw
