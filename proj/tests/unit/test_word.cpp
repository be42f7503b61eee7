#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ppw/word.hpp"

using namespace ppw;

namespace {
Word text(std::string_view s) { return parse_word(s).word; }
}  // namespace

TEST_SUITE("word") {
  TEST_CASE("periods") {
    CHECK(periods(text("entente")) == std::vector<std::size_t>{3, 6, 7});
    CHECK(periods(text("aaaa")) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(periods(text("abcab")) == std::vector<std::size_t>{3, 5});
    CHECK_THROWS_AS(periods(Word{}), std::domain_error);
  }

  TEST_CASE("exponent") {
    CHECK(exponent(text("entente")) == Exponent(7, 3));
    CHECK(exponent(text("alfalfa")) == Exponent(7, 3));
    CHECK(exponent(text("a")) == Exponent(1));
    CHECK_THROWS_AS(exponent(Word{}), std::domain_error);
  }

  TEST_CASE("fractional powers") {
    const auto alf = parse_word("alf");
    CHECK(CodedWord{fractional_power(alf.word, 7, 3), alf.letters}.display() == "alfalfa");
    CHECK(fractional_power(Word::from_digits("01"), 3, 1) == Word::from_digits("010101"));
    CHECK(fractional_power(Word::from_digits("01"), 2, 2) == Word::from_digits("01"));
    CHECK_THROWS_AS(fractional_power(Word::from_digits("01"), 7, 3), std::domain_error);
  }

  TEST_CASE("runs") {
    const auto r = runs(Word::from_digits("0110100"));
    std::vector<std::size_t> lengths;
    for (const auto& x : r) lengths.push_back(x.length);
    CHECK(lengths == std::vector<std::size_t>{1, 2, 1, 1, 2});
    CHECK(runs(text("aaaa")).size() == 1);
    CHECK(runs(Word::from_digits("0101")).size() == 4);
    CHECK(runs(Word{}).empty());
  }

  TEST_CASE("invariants on random words") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
      const Word w = oracle::random_word(rng, 1 + rng() % 30, 2 + rng() % 2);
      const auto ps = periods(w);
      REQUIRE(!ps.empty());
      CHECK(ps.back() == w.size());
      CHECK(ps.front() == oracle::smallest_period(oracle::ints(w), 0, w.size()));
      const Exponent e = exponent(w);
      CHECK(e == Exponent(w.size(), ps.front()));
      if (w.size() % ps.front() == 0) {
        CHECK(fractional_power(w.prefix(ps.front()), w.size(), ps.front()) == w);
      }
      std::size_t total = 0;
      const auto r = runs(w);
      for (std::size_t i = 0; i < r.size(); ++i) {
        total += r[i].length;
        if (i) CHECK(r[i].symbol != r[i - 1].symbol);
      }
      CHECK(total == w.size());
    }
  }

  TEST_CASE("exponent parsing and ordering") {
    CHECK(Exponent::parse("7/3") == Exponent(7, 3));
    CHECK(Exponent::parse("14/6") == Exponent(7, 3));
    CHECK(Exponent::parse("3+") == Exponent(3, 1, true));
    CHECK(Exponent::parse("7/3+").str() == "7/3+");
    CHECK(Exponent(18, 7) < Exponent(13, 5));
    CHECK(Exponent(7, 3) < Exponent(7, 3, true));
    CHECK(Exponent(7, 3, true) < Exponent(12, 5));
    CHECK(Exponent(3).reached_by(3, 1));
    CHECK_FALSE(Exponent(3, 1, true).reached_by(3, 1));
    CHECK(Exponent(3, 1, true).reached_by(4, 1));
    CHECK(Exponent(7, 3).min_length(3) == 7);
    CHECK(Exponent(7, 3, true).min_length(3) == 8);
    CHECK_THROWS(Exponent::parse("x"));
    CHECK_THROWS(Exponent::parse("3/0"));
  }

  TEST_CASE("text format") {
    CHECK(parse_word("0110").word == Word::from_digits("0110"));
    CHECK(parse_word("0 11 3").word.size() == 3);
    CHECK(parse_word("0 11 3").word[1] == 11);
    const auto coded = parse_word("banana");
    CHECK(coded.word == Word::from_digits("012121"));
    CHECK(coded.display() == "banana");
    CHECK(parse_word("0110", WordFormat::Integers).word.size() == 1);
    CHECK_THROWS_AS(parse_word("0x1", WordFormat::Digits), ParseError);
    CHECK(Word::from_digits("0120").str() == "0120");
  }

  TEST_CASE("word construction") {
    CHECK_THROWS_AS(Word({0, 2}, 2), std::invalid_argument);
    const Word w = Word::from_digits("012345");
    CHECK(w.factor(2, 3) == Word::from_digits("234"));
    CHECK(w.prefix(100) == w);
    CHECK(w.distinct_letters() == 6);
  }
}
