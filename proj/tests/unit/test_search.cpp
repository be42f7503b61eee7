#include <doctest.h>

#include "oracle.hpp"
#include "ppw/search.hpp"

using namespace ppw;

namespace {
SearchOutcome longest(std::vector<std::size_t> pp, Exponent e, unsigned alphabet = 2, unsigned threads = 1) {
  SearchSpec s;
  s.alphabet_size = alphabet;
  s.pp = PpTuple(std::move(pp));
  s.forbidden = e;
  s.depth_cap = 2000;
  return longest_constrained_word(s, threads);
}

// Plain DFS over all words without letter canonicalization.
std::size_t brute_longest(const std::vector<std::size_t>& pp, const Exponent& e, std::size_t cap) {
  std::size_t best = 0;
  std::vector<int> w;
  const auto rec = [&](auto&& self) -> void {
    best = std::max(best, w.size());
    if (w.size() == cap) return;
    for (int s = 0; s < 2; ++s) {
      w.push_back(s);
      if (oracle::pseudoperiod(w, pp) && !oracle::has_power(w, e.numerator(), e.denominator(), e.plus())) self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return best;
}
}  // namespace

TEST_SUITE("search") {
  TEST_CASE("table cells") {
    const auto a = longest({1, 4}, Exponent(3));
    CHECK(a.verdict == SearchVerdict::FiniteTree);
    CHECK(a.longest_length == 11);
    CHECK(a.witness.size() == 11);
    CHECK(is_pseudoperiod(a.witness, PpTuple({1, 4})));
    CHECK(is_e_free(a.witness, Exponent(3)));
    CHECK(longest({1, 3}, Exponent(5, 2)).longest_length == 33);
    CHECK(longest({2, 3}, Exponent(13, 5)).longest_length == 30);
  }

  TEST_CASE("agrees with unoptimized search") {
    for (const auto& [pp, e] : std::vector<std::pair<std::vector<std::size_t>, Exponent>>{
             {{1, 4}, Exponent(3)}, {{1, 2}, Exponent(3)}, {{2, 3}, Exponent(3)}, {{1, 3}, Exponent(7, 3)}}) {
      CHECK(std::min<std::size_t>(longest(pp, e).longest_length, 60) == brute_longest(pp, e, 60));
    }
  }

  TEST_CASE("thread count does not change the outcome") {
    const auto one = longest({3, 4}, Exponent(5, 2), 2, 1);
    const auto four = longest({3, 4}, Exponent(5, 2), 2, 4);
    CHECK(one.longest_length == four.longest_length);
    CHECK(one.witness == four.witness);
  }

  TEST_CASE("cap and verdict") {
    SearchSpec s;
    s.pp = PpTuple({1, 3});
    s.forbidden = Exponent(3);
    s.depth_cap = 50;
    const auto o = longest_constrained_word(s);
    CHECK(o.verdict == SearchVerdict::CapExceeded);
    CHECK(o.longest_length == 50);
    CHECK(verdict_name(o.verdict) == "cap_exceeded");
    CHECK(verdict_name(SearchVerdict::FiniteTree) == "finite_tree");
    s.alphabet_size = 1;
    CHECK_THROWS_AS(longest_constrained_word(s), std::invalid_argument);
  }

  TEST_CASE("(1,2) survivors have the alternating form") {
    SearchSpec s;
    s.pp = PpTuple({1, 2});
    s.forbidden = Exponent(4);
    s.depth_cap = 14;
    CHECK(matches_pp12_form(longest_constrained_word(s).witness));
    std::vector<int> w;
    const auto rec = [&](auto&& self) -> void {
      REQUIRE(matches_pp12_form(Word::from_symbols({w.begin(), w.end()})));
      if (w.size() == 14) return;
      for (int c = 0; c < 2; ++c) {
        w.push_back(c);
        if (oracle::pseudoperiod(w, {1, 2}) && !oracle::has_power(w, 4, 1, false)) self(self);
        w.pop_back();
      }
    };
    rec(rec);
  }

  TEST_CASE("constructions") {
    CHECK(verify_construction(shipped_morphism("sha3"), "t", PpTuple({1, 5}), Exponent(3, 1, true), 10000).passed());
    CHECK(verify_construction(shipped_morphism("h1_6"), "vtm", PpTuple({1, 6}), Exponent(7, 3, true), 1000).passed());
    CHECK(verify_construction(shipped_morphism("a45"), "t", PpTuple({1, 9}), Exponent(3, 1, true), 10000).passed());
    const auto bad = verify_construction(shipped_morphism("sha3"), "t", PpTuple({2, 10}), Exponent(3, 1, true), 10000);
    CHECK_FALSE(bad.passed());
    CHECK(bad.pp_violation.has_value());
    CHECK_THROWS_AS(verify_construction(shipped_morphism("sha3"), "t", PpTuple({1, 5}), Exponent(3), 20),
                    std::invalid_argument);
  }

  TEST_CASE("residue classes") {
    CHECK(verify_residue_class(shipped_morphism("a45"), 4, 5, {4, 9, 14, 19}, 10000).passed());
    CHECK(verify_residue_class(shipped_morphism("res_3_7"), 3, 7, {3, 10, 17}, 10000).passed());
    CHECK_THROWS_AS(verify_residue_class(shipped_morphism("a45"), 4, 5, {7}, 10000), std::invalid_argument);
    CHECK_THROWS_AS(verify_residue_class(shipped_morphism("h1_6"), 4, 5, {4}, 10000), std::invalid_argument);
    CHECK(residue_table().size() == 19);
    CHECK(residue_table().front().n == 5);
    CHECK_THROWS_AS(shipped_morphism("nope"), std::invalid_argument);
  }

  TEST_CASE("threshold words") {
    const Word four = generate_threshold_word(4, Exponent(7, 5), 200);
    CHECK(four.size() == 200);
    CHECK(is_e_plus_free(four, Exponent(7, 5)));
    const Word five = generate_threshold_word(5, Exponent(5, 4), 200);
    CHECK(is_e_plus_free(five, Exponent(5, 4)));
    const Word two = generate_threshold_word(2, Exponent(2), 100);
    CHECK(is_e_plus_free(two, Exponent(2)));
    CHECK_THROWS_AS(generate_threshold_word(2, Exponent(2), 10, 5), SearchExhausted);
    CHECK_THROWS_AS(generate_threshold_word(2, Exponent(3, 2), 100), SearchExhausted);
  }

  TEST_CASE("large alphabet theorems") {
    for (const auto& name : large_alphabet_theorem_names()) {
      const auto data = large_alphabet_theorem(name);
      const auto r = verify_large_alphabet_theorem(name, 12);
      CHECK(r.image_length == 12 * data.uniform_length);
      CHECK(r.passed());
    }
    CHECK(large_alphabet_theorem("18_37").uniform_length == 188);
    CHECK(large_alphabet_theorem("4_10").uniform_length == 170);
    CHECK(large_alphabet_theorem("9_19").uniform_length == 84);
    CHECK_THROWS_AS(large_alphabet_theorem("1_2"), std::invalid_argument);
    CHECK_THROWS(parse_prefixed_uniform("uniform 5\nprefix 01\n0 001\n1 01\n"));
    std::size_t n = 0;
    Word p;
    const auto m = parse_prefixed_uniform("uniform 4\nprefix 01\n0 00\n1 11\n", &n, &p);
    CHECK(n == 4);
    CHECK(p == Word::from_digits("01"));
    CHECK(m.image(1) == Word::from_digits("0111"));
  }
}
