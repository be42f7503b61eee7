#include <doctest.h>

#include "oracle.hpp"
#include "ppw/generators.hpp"
#include "ppw/pseudoperiod.hpp"
#include "ppw/search.hpp"

using namespace ppw;

namespace {
Word d(std::string_view s) { return Word::from_digits(s); }

PaperfoldingCode code_of(unsigned bits, unsigned len) {
  PaperfoldingCode c;
  for (unsigned i = 0; i < len; ++i) c.instructions.push_back((bits >> i) & 1u ? -1 : 1);
  return c;
}

// Folding by definition: position i (1-based) = 2^v * odd, the symbol is set
// by instruction v+1 and whether odd = 1 or 3 mod 4.
Word fold_oracle(const PaperfoldingCode& c) {
  const std::size_t n = (std::size_t{1} << c.instructions.size()) - 1;
  std::vector<Symbol> s(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t v = 0;
    std::size_t m = i;
    while (m % 2 == 0) {
      m /= 2;
      ++v;
    }
    const int f = c.instructions[v];
    const bool plus = (m % 4 == 1) == (f == 1);
    s[i - 1] = plus ? kFoldSymbolPlus : kFoldSymbolMinus;
  }
  return Word(std::move(s), 2);
}
}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("fixed points") {
    CHECK(fixed_point_prefix(Morphism::parse("0->01 1->10"), 0, 8) == d("01101001"));
    CHECK(fixed_point_prefix(Morphism::parse("0->001 1->110"), 0, 9) == d("001001110"));
    CHECK(fixed_point_prefix(Morphism::parse("0->01 1->10"), 0, 0).empty());
    CHECK_THROWS_AS(fixed_point_prefix(Morphism::parse("0->10 1->01"), 0, 4), std::domain_error);
  }

  TEST_CASE("registry") {
    CHECK(named_sequence("t", 16) == d("0110100110010110"));
    CHECK(named_sequence("vtm", 6) == d("210201"));
    CHECK(named_sequence("pd", 10) == d("1011101010"));
    CHECK(named_sequence("f", 8) == d("01001010"));
    CHECK(named_sequence("tr", 13) == d("0102010010201"));
    CHECK(named_sequence("mw", 9) == d("001001110"));
    CHECK(named_sequence("rs", 8) == d("00010010"));
    CHECK(sequence_names().size() == 7);
    CHECK_THROWS_AS(named_sequence("nope", 3), std::invalid_argument);
    // memoized prefixes agree with fresh ones
    CHECK(named_sequence("t", 5000).prefix(100) == named_sequence("t", 100));
  }

  TEST_CASE("rudin-shapiro") {
    const Word r = rudin_shapiro_prefix(4096);
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned count = 0;
      for (std::size_t b = 0; b + 1 < 64; ++b) count += ((i >> b) & 3u) == 3u;
      REQUIRE(r[i] == count % 2);
    }
    CHECK(r[0] == 0);
    CHECK(r[3] == 1);
  }

  TEST_CASE("paperfolding") {
    PaperfoldingCode plus{{1, 1, 1, 1}};
    CHECK(paperfolding_word(plus) == d("110110011100100"));
    CHECK(paperfolding_word(PaperfoldingCode{{1}}).size() == 1);
    for (unsigned len = 1; len <= 8; ++len) {
      for (unsigned bits = 0; bits < (1u << len); ++bits) {
        const auto c = code_of(bits, len);
        REQUIRE(paperfolding_word(c) == fold_oracle(c));
      }
    }
    for (unsigned bits = 0; bits < 16; ++bits) {
      CHECK(is_pseudoperiod(paperfolding_word(code_of(bits, 4)), PpTuple({1, 3, 4})));
    }
    CHECK_THROWS(paperfolding_word(PaperfoldingCode{{1, 2}}));
  }

  TEST_CASE("sturmian") {
    ContinuedFraction golden{{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
    CHECK(sturmian_characteristic(golden, 8) == d("01001010"));
    CHECK(sturmian_characteristic(golden, 1000) == named_sequence("f", 1000));
    CHECK(sturmian_characteristic(ContinuedFraction{{1}}, 1) == d("1"));
    CHECK_THROWS_AS(sturmian_characteristic(ContinuedFraction{{2, 1}}, 1000), std::invalid_argument);
    // pseudoperiod (c1, c1+1)
    for (std::uint64_t c1 = 2; c1 <= 5; ++c1) {
      ContinuedFraction cf{{c1, 2, 1, 3, 1, 2, 1, 1, 2, 1, 3, 1, 2, 1, 1, 2, 1, 3, 1, 2}};
      CHECK(is_pseudoperiod(sturmian_characteristic(cf, 2000), PpTuple({c1, c1 + 1})));
    }
  }

  TEST_CASE("morphisms") {
    const auto mu = Morphism::parse("0->01 1->10");
    CHECK(apply_morphism(mu, d("011")) == d("011010"));
    CHECK(mu.uniform_length() == std::optional<std::size_t>(2));
    CHECK(Morphism::parse("morphism mu \"0->01 1->10\":").str() == mu.str());
    CHECK_THROWS_AS(Morphism::parse("0->01 0->10"), ParseError);
    CHECK_THROWS(Morphism::parse("0->"));
    const auto h16 = shipped_morphism("h1_6");
    CHECK(h16.image(0) == d("0011011001011001"));
    CHECK(h16.image(2) == d("001101"));
    const auto sha3 = shipped_morphism("sha3");
    CHECK(sha3.image(1) == d("11100111000"));
    const auto composed = compose(mu, sha3);
    CHECK(composed.image(0) == apply_morphism(mu, sha3.image(0)));
  }

  TEST_CASE("image constructions") {
    const Word h16 = apply_morphism(shipped_morphism("h1_6"), named_sequence("vtm", 200));
    CHECK(is_pseudoperiod(h16, PpTuple({1, 6})));
    const Word s3 = apply_morphism(shipped_morphism("sha3"), named_sequence("t", 200));
    CHECK(is_pseudoperiod(s3, PpTuple({1, 5})));
  }
}
