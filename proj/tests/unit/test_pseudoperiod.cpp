#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ppw/generators.hpp"
#include "ppw/pseudoperiod.hpp"

using namespace ppw;

TEST_SUITE("pseudoperiod") {
  TEST_CASE("tuples") {
    CHECK(PpTuple::parse("(1,8,9)").str() == "(1,8,9)");
    CHECK(PpTuple::parse("1, 8, 9") == PpTuple({1, 8, 9}));
    CHECK_THROWS_AS(PpTuple({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PpTuple({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PpTuple(std::vector<std::size_t>{}), std::invalid_argument);
    CHECK_THROWS(PpTuple::parse("1,,2"));
  }

  TEST_CASE("checks on sequences") {
    const Word t = named_sequence("t", 10000);
    CHECK(is_pseudoperiod(t, PpTuple({1, 8, 9})));
    CHECK(is_pseudoperiod(named_sequence("tr", 10000), PpTuple({4, 6, 7})));
    const Word w = Word::from_digits("0110");
    CHECK(is_pseudoperiod(w, PpTuple({4})));
    const auto v = first_violation(named_sequence("t", 64), PpTuple({2, 5}));
    REQUIRE(v);
    CHECK(3 * *v <= 25);
    CHECK(first_violation(Word::from_digits("00000"), PpTuple({1, 2})) == std::nullopt);
  }

  TEST_CASE("agrees with the oracle") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 3000; ++iter) {
      const Word w = oracle::random_word(rng, rng() % 25, 2 + rng() % 2);
      std::vector<std::size_t> t;
      for (std::size_t p = 1; p <= 7; ++p) {
        if (rng() % 3 == 0) t.push_back(p);
      }
      if (t.empty()) t.push_back(1 + rng() % 7);
      const PpTuple tt(t);
      const bool expected = oracle::pseudoperiod(oracle::ints(w), t);
      REQUIRE(is_pseudoperiod(w, tt) == expected);
      REQUIRE(is_pseudoperiod_by_factors(w, tt) == expected);
      const auto v = first_violation(w, tt);
      REQUIRE(v.has_value() != expected);
      if (v) REQUIRE_FALSE(oracle::pseudoperiod(oracle::ints(w.prefix(*v + tt.max() + 1)), t));
    }
  }

  TEST_CASE("enumeration") {
    const Word t = named_sequence("t", 10000);
    CHECK(enumerate_pseudoperiods(t, 2, 64).empty());
    CHECK(enumerate_pseudoperiods(parse_word("ab").word, 1, 2) == std::vector<PpTuple>{PpTuple({2})});
    CHECK(min_pseudoperiod_size(t, 8) == std::optional<std::size_t>(3));
    CHECK(min_pseudoperiod_size(named_sequence("rs", 10000), 8) == std::optional<std::size_t>(4));
    CHECK(min_pseudoperiod_size(Word::from_digits("0000"), 1) == std::optional<std::size_t>(1));
    CHECK(find_pseudoperiod(named_sequence("rs", 10000), 4, 5) == PpTuple({2, 3, 4, 5}));
    const auto fib = enumerate_pseudoperiods(named_sequence("f", 10000), 2, 10);
    CHECK(std::find(fib.begin(), fib.end(), PpTuple({2, 3})) != fib.end());

    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
      const Word w = oracle::random_word(rng, 10 + rng() % 40, 2);
      const std::size_t k = 1 + rng() % 3;
      const std::size_t bound = k + rng() % 6;
      std::vector<PpTuple> brute;
      for (std::uint64_t mask = 0; mask < (1u << bound); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        std::vector<std::size_t> t;
        for (std::size_t p = 1; p <= bound; ++p) {
          if ((mask >> (p - 1)) & 1u) t.push_back(p);
        }
        if (oracle::pseudoperiod(oracle::ints(w), t)) brute.emplace_back(t);
      }
      std::sort(brute.begin(), brute.end());
      const auto got = enumerate_pseudoperiods(w, k, bound);
      REQUIRE(got == brute);
      CHECK(enumerate_pseudoperiods(w, k, bound, 3) == got);
      CHECK(find_pseudoperiod(w, k, bound) == (got.empty() ? std::nullopt : std::optional<PpTuple>(got.front())));
    }
  }

  TEST_CASE("gaps and runs") {
    CHECK(max_gap(named_sequence("t", 1000)) == 3);
    CHECK(max_gap(parse_word("aa").word) == 1);
    CHECK_THROWS_AS(max_gap(Word::from_digits("0")), std::domain_error);
    CHECK(run_length_tuple(named_sequence("t", 1000)) == PpTuple({1, 2, 3}));
    CHECK(run_length_tuple(Word::from_digits("0111")) == PpTuple({1, 2, 3, 4}));
    CHECK_THROWS_AS(run_length_tuple(Word::from_digits("0000")), std::domain_error);
    CHECK_THROWS_AS(run_length_tuple(Word::from_digits("012")), std::domain_error);
    const Word pd = named_sequence("pd", 1000);
    CHECK(is_pseudoperiod(pd, run_length_tuple(pd)));
  }

  TEST_CASE("(1,2) form") {
    CHECK(matches_pp12_form(parse_word("aaababa").word));
    CHECK_FALSE(matches_pp12_form(parse_word("abba").word));
    CHECK_FALSE(is_pseudoperiod(parse_word("abba").word, PpTuple({1, 2})));
    CHECK(matches_pp12_form(Word{}));
  }

  TEST_CASE("subset counts") {
    CHECK(subset_count(5, 2) == 10);
    CHECK(subset_count(9, 5) == 126);
    CHECK(subset_count(3, 4) == 0);
    CHECK(subset_count(1000, 500) == SIZE_MAX);
  }
}
