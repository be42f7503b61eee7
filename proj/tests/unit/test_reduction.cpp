#include <doctest.h>

#include <random>

#include "ppw/reduction.hpp"

using namespace ppw;

namespace {
HittingSetInstance hs(std::size_t n, std::vector<std::vector<std::size_t>> sets, std::size_t k) {
  HittingSetInstance h;
  h.n = n;
  h.sets = std::move(sets);
  h.k_prime = k;
  return h;
}
}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("gadget") {
    const auto inst = build_pp_instance(hs(1, {{1}}, 1));
    CHECK(inst.x == Word::from_digits("11000000010100000001001000000010001000000110"));
    CHECK(inst.k == 5);
    CHECK(inst.bound == 9);
    const auto twin = build_pp_instance(hs(3, {{1, 3}, {1, 3}}, 1));
    const std::size_t z = 8 * 3 + 6;
    const std::size_t head = twin.x.size() - 2 * z;
    CHECK(twin.x.factor(head, z) == twin.x.factor(head + z, z));
  }

  TEST_CASE("solvers") {
    CHECK(solve_pseudoperiod(build_pp_instance(hs(1, {{1}}, 1))) == PpTuple({1, 2, 3, 4, 8}));
    CHECK(solve_pseudoperiod(build_pp_instance(hs(2, {{1}, {2}}, 1))) == std::nullopt);
    CHECK(solve_pseudoperiod(PseudoperiodInstance{Word::from_digits("000000"), 3, 3}) == PpTuple({1, 2, 3}));
    CHECK(solve_hitting_set(hs(3, {{1, 2}, {2, 3}}, 1)) == std::vector<std::size_t>{2});
    CHECK(solve_hitting_set(hs(2, {{1}, {2}}, 1)) == std::nullopt);
    CHECK(solve_hitting_set(hs(4, {{1}, {2}, {3}, {4}}, 4)).has_value());
  }

  TEST_CASE("explosion guard") {
    PseudoperiodInstance big{Word::from_digits("0101"), 15, 40};
    CHECK_THROWS_AS(solve_pseudoperiod(big), ExplosionError);
    CHECK_THROWS_AS(solve_pseudoperiod(big, SolverLimits{1000}), ExplosionError);
    CHECK_THROWS_AS(solve_hitting_set(hs(10, {{1}}, 5), SolverLimits{100}), ExplosionError);
  }

  TEST_CASE("extraction") {
    const auto h = hs(1, {{1}}, 1);
    CHECK(extract_hitting_set(h, PpTuple({1, 2, 3, 4, 8})) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(extract_hitting_set(h, PpTuple({2, 3, 4, 8, 9})), StructuralError);
    const auto h2 = hs(2, {{2}}, 2);
    CHECK_THROWS_AS(extract_hitting_set(h2, PpTuple({1, 2, 3, 4, 12})), StructuralError);
    CHECK(extract_hitting_set(h2, PpTuple({1, 2, 3, 8, 12})) == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("scaffold offsets are necessary") {
    for (const auto& h : {hs(1, {{1}}, 1), hs(3, {{1, 2}, {2, 3}}, 1), hs(3, {{1}, {3}}, 2)}) {
      const auto inst = build_pp_instance(h);
      const auto sol = solve_pseudoperiod(inst);
      REQUIRE(sol);
      for (std::size_t drop : {std::size_t{1}, std::size_t{2}, std::size_t{3}, 4 * h.n + 4}) {
        std::vector<std::size_t> rest;
        for (auto p : *sol) {
          if (p != drop) rest.push_back(p);
        }
        CHECK_FALSE(is_pseudoperiod(inst.x, PpTuple(rest)));
      }
    }
  }

  TEST_CASE("random round trips") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
      const std::size_t n = 1 + rng() % 4;
      const std::size_t m = 1 + rng() % 3;
      std::vector<std::vector<std::size_t>> sets;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> s;
        for (std::size_t e = 1; e <= n; ++e) {
          if (rng() % 2) s.push_back(e);
        }
        if (s.empty()) s.push_back(1 + rng() % n);
        sets.push_back(s);
      }
      const auto h = hs(n, sets, 1 + rng() % n);
      const auto inst = build_pp_instance(h);
      const auto direct = solve_hitting_set(h);
      const auto via = solve_pseudoperiod(inst);
      REQUIRE(direct.has_value() == via.has_value());
      if (direct) CHECK(is_pseudoperiod(inst.x, pseudoperiod_from_hitting_set(h, *direct)));
      if (via) {
        const auto back = extract_hitting_set(h, *via);
        CHECK(back.size() == h.k_prime);
        CHECK(is_hitting_set(h, back));
      }
    }
  }

  TEST_CASE("text formats") {
    const auto h = HittingSetInstance::parse("4 2 2\n1 3\n\n2 4 2\n");
    CHECK(h.sets[1] == std::vector<std::size_t>{2, 4});
    CHECK(HittingSetInstance::parse(h.str()).str() == h.str());
    CHECK_THROWS_AS(HittingSetInstance::parse("2 2 1\n1\n"), ParseError);
    CHECK_THROWS_AS(HittingSetInstance::parse("2 1 1\n3\n"), ParseError);
    CHECK_THROWS_AS(HittingSetInstance::parse("2 1 3\n1\n"), ParseError);
    CHECK_THROWS_AS(HittingSetInstance::parse("2 1 1\nx\n"), ParseError);
    const auto inst = build_pp_instance(h);
    const auto again = PseudoperiodInstance::parse(inst.str());
    CHECK(again.x == inst.x);
    CHECK(again.k == inst.k);
    CHECK(again.bound == inst.bound);
    CHECK_THROWS_AS(PseudoperiodInstance::parse("0101\n3\n"), ParseError);
    CHECK_THROWS_AS(PseudoperiodInstance::parse("0101\n3 2\n"), ParseError);
    CHECK_THROWS_AS(build_pp_instance(hs(2, {{}}, 1)), std::invalid_argument);
  }
}
