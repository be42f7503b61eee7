#include <doctest.h>

#include <set>

#include "ppw/automata.hpp"
#include "ppw/generators.hpp"
#include "ppw/pseudoperiod.hpp"

using namespace ppw;

namespace {
bool acc(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const std::uint64_t t[] = {a, b, c};
  return dfa_accepts(triple_automaton(), t);
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_walnut_dfa(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_SUITE("automata") {
  TEST_CASE("shipped automaton") {
    const auto& d = triple_automaton();
    CHECK(d.state_count() == 53);
    CHECK(d.arity() == 3);
    CHECK_FALSE(d.accepting(0));
    const unsigned col[] = {0, 0, 1};
    CHECK(d.next(0, col) == 1);
    const unsigned zero[] = {0, 0, 0};
    CHECK(d.next(0, zero) == 0);
  }

  TEST_CASE("acceptance") {
    CHECK(acc(1, 8, 9));
    CHECK(acc(3, 7, 11));
    CHECK(acc(1, 2, 3));
    CHECK_FALSE(acc(0, 0, 0));
    const std::uint64_t pair[] = {1, 2};
    CHECK_THROWS_AS(dfa_accepts(triple_automaton(), pair), std::invalid_argument);
  }

  TEST_CASE("cross-check with Thue-Morse prefix") {
    const Word t = named_sequence("t", 1u << 12);
    for (std::uint64_t c = 3; c <= 24; ++c) {
      for (std::uint64_t b = 2; b < c; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
          REQUIRE(acc(a, b, c) == is_pseudoperiod(t, PpTuple({a, b, c})));
        }
      }
    }
  }

  TEST_CASE("enumeration") {
    const auto& d = triple_automaton();
    const auto nine = dfa_enumerate(d, 9);
    CHECK(std::find(nine.begin(), nine.end(), std::vector<std::uint64_t>{1, 8, 9}) != nine.end());
    CHECK(dfa_enumerate(d, 0).empty());
    std::vector<std::vector<std::uint64_t>> brute;
    for (std::uint64_t a = 0; a <= 20; ++a) {
      for (std::uint64_t b = 0; b <= 20; ++b) {
        for (std::uint64_t c = 0; c <= 20; ++c) {
          if (acc(a, b, c)) brute.push_back({a, b, c});
        }
      }
    }
    CHECK(dfa_enumerate(d, 20) == brute);
    CHECK(dfa_enumerate(parse_walnut_dfa("msd_2\n0 0\n0 -> 0\n1 -> 0\n"), 50).empty());
  }

  TEST_CASE("parser") {
    const auto unary = parse_walnut_dfa("msd_2\n\n0 1\n0 -> 0\n");
    CHECK(unary.state_count() == 1);
    CHECK(unary.arity() == 1);
    const std::uint64_t zero[] = {0};
    const std::uint64_t one[] = {1};
    CHECK(dfa_accepts(unary, zero));
    CHECK_FALSE(dfa_accepts(unary, one));
    CHECK(parse_walnut_dfa("msd_2   \n0 1  \n0 -> 0   \n\n").state_count() == 1);

    CHECK(parse_error_line("msd_2\n0 1\n2 -> 0\n") == 3);
    CHECK(parse_error_line("msd_3\n0 1\n0 -> 0\n") == 1);
    CHECK(parse_error_line("msd_2 msd_2\n0 1\n0 -> 0\n") == 3);
    CHECK(parse_error_line("msd_2\n0 -> 0\n") == 2);
    CHECK(parse_error_line("msd_2\n0 1\n0 -> 0\n0 -> 0\n") == 4);
    CHECK(parse_error_line("msd_2\n0 1\n0 -> 4\n") == 3);
    CHECK(parse_error_line("msd_2\n0 1\n0 -> 0\n0 1\n") == 4);
    CHECK(parse_error_line("msd_2\n0 2\n") == 2);
    CHECK(parse_error_line("msd_2\n1 0\n") == 2);
    CHECK_THROWS_AS(parse_walnut_dfa(""), ParseError);
  }

  TEST_CASE("closed forms") {
    CHECK(shev_cond(1, 2, 3));
    CHECK_FALSE(shev_cond(1, 8, 9));
    CHECK_FALSE(shev_cond(5, 5, 5));
    CHECK_FALSE(shev_cond(0, 1, 2));
    CHECK(tm_distance_predicates(11).parta);
    CHECK(tm_distance_predicates(5).partb);
    CHECK_FALSE(tm_distance_predicates(0).parta);
    // parta = (2^j-1)2^i, (2^{2j-1}+1)2^i, 11*2^i; partb = (2^j-1)2^i, (2^j+1)2^i
    std::set<std::uint64_t> pa;
    std::set<std::uint64_t> pb;
    for (unsigned i = 0; i < 12; ++i) {
      for (unsigned j = 1; j < 12; ++j) {
        pa.insert(((std::uint64_t{1} << j) - 1) << i);
        pb.insert(((std::uint64_t{1} << j) - 1) << i);
        pb.insert(((std::uint64_t{1} << j) + 1) << i);
        pa.insert(((std::uint64_t{1} << (2 * j - 1)) + 1) << i);
      }
      pa.insert(std::uint64_t{11} << i);
    }
    for (std::uint64_t n = 1; n < 2048; ++n) {
      REQUIRE(tm_distance_predicates(n).parta == (pa.count(n) == 1));
      REQUIRE(tm_distance_predicates(n).partb == (pb.count(n) == 1));
    }
    CHECK(vtm_triple_predicate(2, 3, 4));
    CHECK_FALSE(vtm_triple_predicate(1, 2, 3));
    CHECK_FALSE(vtm_triple_predicate(0, 1, 2));
  }
}
