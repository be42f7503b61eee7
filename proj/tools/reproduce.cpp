#include "reproduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ppw/automata.hpp"
#include "ppw/generators.hpp"
#include "ppw/pseudoperiod.hpp"
#include "ppw/reduction.hpp"
#include "ppw/search.hpp"

namespace ppw::tools {

namespace {

struct Cell {
  std::size_t a, b;
  std::uint64_t num, den;
  std::size_t printed;
};

// Optimal exponents and longest finite words for pseudoperiod (a, b).
const std::vector<Cell>& table_cells() {
  static const std::vector<Cell> cells{
      {1, 3, 5, 2, 33},   {1, 4, 3, 1, 11},   {1, 5, 13, 5, 29},  {1, 6, 7, 3, 15},    {1, 7, 3, 1, 61},
      {1, 8, 3, 1, 45},   {1, 9, 5, 2, 43},   {1, 10, 5, 2, 33},  {1, 11, 5, 2, 52},   {1, 12, 5, 2, 57},
      {2, 3, 13, 5, 30},  {2, 5, 3, 1, 15},   {2, 6, 5, 2, 66},   {2, 7, 13, 5, 84},   {2, 8, 13, 5, 30},
      {2, 9, 5, 2, 19},   {2, 10, 13, 5, 60}, {2, 11, 5, 2, 20},  {2, 12, 7, 3, 31},   {3, 4, 5, 2, 33},
      {3, 5, 13, 5, 34},  {3, 7, 13, 5, 98},  {3, 8, 5, 2, 42},   {3, 9, 8, 3, 28},    {3, 10, 13, 5, 69},
      {3, 11, 5, 2, 59},  {3, 12, 8, 3, 72},  {4, 5, 3, 1, 21},   {4, 6, 7, 3, 40},    {4, 7, 3, 1, 61},
      {4, 9, 7, 3, 18},   {4, 10, 5, 2, 33},  {4, 11, 5, 2, 19},  {4, 12, 5, 2, 141},  {5, 6, 5, 2, 66},
      {5, 7, 3, 1, 68},   {5, 8, 13, 5, 33},  {5, 9, 5, 2, 66},   {5, 11, 5, 2, 20},   {5, 12, 18, 7, 158},
      {6, 7, 7, 3, 40},   {6, 8, 5, 2, 60},   {6, 9, 17, 6, 89},  {6, 10, 7, 3, 48},   {6, 11, 5, 2, 69},
      {7, 8, 13, 5, 50},  {7, 9, 7, 3, 41},   {7, 10, 13, 5, 92}, {7, 11, 13, 5, 84},  {7, 12, 7, 3, 31},
      {8, 9, 5, 2, 66},   {8, 10, 5, 2, 33},  {8, 11, 3, 1, 65},  {8, 12, 7, 3, 82},   {9, 10, 7, 3, 40},
      {9, 11, 5, 2, 57},  {9, 12, 55, 21, 200}, {10, 11, 5, 2, 33}, {10, 12, 7, 3, 54}, {11, 12, 7, 3, 31},
  };
  return cells;
}

std::vector<Check> table1(unsigned threads) {
  std::vector<Check> out;
  for (const auto& c : table_cells()) {
    SearchSpec spec;
    spec.pp = PpTuple({c.a, c.b});
    spec.forbidden = Exponent(c.num, c.den);
    spec.depth_cap = 10 * c.printed + 100;
    const auto o = longest_constrained_word(spec, threads);
    std::ostringstream detail;
    detail << verdict_name(o.verdict) << ", longest " << o.longest_length << ", printed " << c.printed;
    out.push_back({"(" + std::to_string(c.a) + "," + std::to_string(c.b) + ") @ " + spec.forbidden.str(),
                   o.verdict == SearchVerdict::FiniteTree && o.longest_length == c.printed, detail.str()});
  }
  return out;
}

std::size_t ceil_div(std::size_t x, std::size_t y) { return (x + y - 1) / y; }

std::vector<Check> shevelev() {
  std::vector<Check> out;
  const Word t = named_sequence("t", 1u << 15);

  {
    bool ok = true;
    std::string where;
    for (std::size_t b = 2; b <= 64 && ok; ++b) {
      const Word w = t.prefix(2 * ceil_div(5 * b, 3) + b + 2);
      for (std::size_t a = 1; a < b; ++a) {
        const auto v = first_violation(w, PpTuple({a, b}));
        if (!v || 3 * *v > 5 * b) {
          ok = false;
          where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
          break;
        }
      }
    }
    out.push_back({"violation at some n <= 5b/3 for all a < b <= 64", ok, ok ? "" : "fails at " + where});
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t m = 1; m <= 32 && ok; ++m) {
      bool found = false;
      for (std::size_t b = m + 1; b <= 256 && !found; ++b) {
        const Word w = t.prefix(2 * ceil_div(5 * b, 3) + b + 2);
        for (std::size_t a = 1; a < b && !found; ++a) {
          const auto v = first_violation(w, PpTuple({a, b}));
          found = !v || 3 * *v >= 5 * b;
        }
      }
      if (!found) {
        ok = false;
        detail = "no tight pair beyond m = " + std::to_string(m);
      }
    }
    out.push_back({"the 5b/3 bound is tight for every m <= 32", ok, detail});
  }

  const TupleDfa& dfa = triple_automaton();
  out.push_back({"triple automaton has 53 states", dfa.state_count() == 53,
                 std::to_string(dfa.state_count()) + " states"});
  {
    bool ok = dfa_accepts(dfa, std::vector<std::uint64_t>{1, 8, 9});
    for (std::uint64_t a = 1; a <= 512; ++a) {
      for (std::uint64_t x = 1; a + 2 * x <= 512; x *= 2) {
        ok = ok && dfa_accepts(dfa, std::vector<std::uint64_t>{a, a + x, a + 2 * x});
      }
    }
    out.push_back({"accepts (1,8,9) and every (a, a+2^k, a+2^(k+1)) with c <= 512", ok, ""});
  }
  {
    std::size_t mismatches = 0;
    for (std::size_t c = 3; c <= 40; ++c) {
      for (std::size_t b = 2; b < c; ++b) {
        for (std::size_t a = 1; a < b; ++a) {
          const bool accepted = dfa_accepts(dfa, std::vector<std::uint64_t>{a, b, c});
          mismatches += accepted != !first_violation(t, PpTuple({a, b, c}));
        }
      }
    }
    out.push_back({"automaton agrees with the prefix check for c <= 40", mismatches == 0,
                   std::to_string(mismatches) + " mismatches"});
  }
  {
    std::size_t scaling = 0;
    std::size_t theorem2 = 0;
    for (std::size_t c = 3; c <= 64; ++c) {
      for (std::size_t b = 2; b < c; ++b) {
        for (std::size_t a = 1; a < b; ++a) {
          const bool acc = dfa_accepts(dfa, std::vector<std::uint64_t>{a, b, c});
          scaling += acc != dfa_accepts(dfa, std::vector<std::uint64_t>{2 * a, 2 * b, 2 * c});
          bool neq = true;
          for (std::size_t i = 0; i + c < t.size() && neq; ++i) {
            neq = !(t[i + a] == t[i + b] && t[i + b] == t[i + c]);
          }
          theorem2 += (acc && neq) != shev_cond(a, b, c);
        }
      }
    }
    out.push_back({"scaling (a,b,c) <-> (2a,2b,2c) for c <= 64", scaling == 0, std::to_string(scaling) + " mismatches"});
    out.push_back({"triple and neqtriple <-> b = a+2^k, c = a+2^(k+1) for c <= 64", theorem2 == 0,
                   std::to_string(theorem2) + " mismatches"});
  }
  {
    std::set<std::uint64_t> da;
    std::set<std::uint64_t> db;
    // distances up to 127 first occur in triples with c up to 4 * 128
    for (const auto& tuple : dfa_enumerate(dfa, 512)) {
      if (tuple[1] > tuple[0] && tuple[1] - tuple[0] <= 127) da.insert(tuple[1] - tuple[0]);
      if (tuple[2] > tuple[1] && tuple[2] - tuple[1] <= 127) db.insert(tuple[2] - tuple[1]);
    }
    std::set<std::uint64_t> pa;
    std::set<std::uint64_t> pb;
    for (std::uint64_t n = 1; n <= 127; ++n) {
      const auto p = tm_distance_predicates(n);
      if (p.parta) pa.insert(n);
      if (p.partb) pb.insert(n);
    }
    out.push_back({"b - a values match parta up to 127", da == pa,
                   std::to_string(da.size()) + " vs " + std::to_string(pa.size())});
    out.push_back({"c - b values match partb up to 127", db == pb,
                   std::to_string(db.size()) + " vs " + std::to_string(pb.size())});
  }
  return out;
}

std::vector<Check> vtm() {
  const Word w = named_sequence("vtm", 1u << 15);
  std::size_t mismatches = 0;
  std::size_t accepted = 0;
  std::string first;
  for (std::size_t c = 3; c <= 64; ++c) {
    for (std::size_t b = 2; b < c; ++b) {
      for (std::size_t a = 1; a < b; ++a) {
        const bool pred = vtm_triple_predicate(a, b, c);
        const bool clean = !first_violation(w, PpTuple({a, b, c}));
        accepted += pred;
        if (pred != clean) {
          if (mismatches++ == 0) first = PpTuple({a, b, c}).str();
        }
      }
    }
  }
  return {{"vtm 3-pseudoperiods with c <= 64 match the three families", mismatches == 0,
           std::to_string(accepted) + " triples in the families, " + std::to_string(mismatches) + " mismatches" +
               (first.empty() ? "" : ", first " + first)}};
}

std::vector<Check> paperfolding() {
  std::vector<Check> out;
  std::size_t failures = 0;
  for (unsigned len = 1; len <= 8; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      PaperfoldingCode code;
      for (unsigned j = 0; j < len; ++j) code.instructions.push_back((bits >> j) & 1u ? -1 : 1);
      failures += !is_pseudoperiod(paperfolding_word(code), PpTuple({1, 3, 4}));
    }
  }
  out.push_back({"(1,3,4) holds for every code of length <= 8", failures == 0, std::to_string(failures) + " failures"});

  bool family = true;
  bool regular_fails = true;
  for (unsigned len = 6; len <= 14; ++len) {
    PaperfoldingCode code{std::vector<int>(len, 1)};
    code.instructions[0] = -1;
    family = family && is_pseudoperiod(paperfolding_word(code), PpTuple({1, 2, 16}));
    regular_fails = regular_fails && !is_pseudoperiod(paperfolding_word({std::vector<int>(len, 1)}), PpTuple({1, 2, 16}));
  }
  out.push_back({"(1,2,16) holds for codes -1 +1 +1 ... (lengths 6..14)", family, ""});
  out.push_back({"(1,2,16) fails for the regular code +1 +1 +1 ...", regular_fails, ""});
  return out;
}

std::vector<Check> reduction() {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t round_trip = 0;
  // every nonempty subset of [1, n] as a bit mask
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t masks = (std::size_t{1} << n) - 1;
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<std::size_t> pick(m, 1);
      while (true) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(n, 2); ++k) {
          HittingSetInstance h;
          h.n = n;
          h.k_prime = k;
          for (auto mask : pick) {
            std::vector<std::size_t> s;
            for (std::size_t e = 1; e <= n; ++e) {
              if (mask >> (e - 1) & 1u) s.push_back(e);
            }
            h.sets.push_back(s);
          }
          ++instances;
          const auto hs = solve_hitting_set(h);
          const auto inst = build_pp_instance(h);
          const auto pp = solve_pseudoperiod(inst);
          if (hs.has_value() != pp.has_value()) ++mismatches;
          if (hs && !is_pseudoperiod(inst.x, pseudoperiod_from_hitting_set(h, *hs))) ++round_trip;
          if (pp) {
            try {
              const auto back = extract_hitting_set(h, *pp);
              if (back.size() != k || !is_hitting_set(h, back)) ++round_trip;
            } catch (const StructuralError&) {
              ++round_trip;
            }
          }
        }
        std::size_t i = 0;
        while (i < m && pick[i] == masks) pick[i++] = 1;
        if (i == m) break;
        ++pick[i];
      }
    }
  }
  return {{"HITTING SET and PSEUDOPERIOD agree on all instances with n <= 4, m <= 3, k' <= 2", mismatches == 0,
           std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches"},
          {"forward construction and extraction round-trips", round_trip == 0,
           std::to_string(round_trip) + " failures"}};
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> names{"table1", "shevelev", "vtm", "paperfolding", "reduction"};
  return names;
}

std::vector<Check> reproduce(std::string_view which, unsigned threads) {
  if (which == "table1") return table1(threads);
  if (which == "shevelev") return shevelev();
  if (which == "vtm") return vtm();
  if (which == "paperfolding") return paperfolding();
  if (which == "reduction") return reduction();
  throw std::invalid_argument("unknown reproduction '" + std::string(which) + "'");
}

}  // namespace ppw::tools
