#pragma once

// HITTING SET reduces to PSEUDOPERIOD: instance construction, brute-force
// solvers for both problems and mapping a pseudoperiod back to a hitting set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppw/pseudoperiod.hpp"
#include "ppw/word.hpp"

namespace ppw {

/// Sets over the universe {1, ..., n} and a target size k'.
struct HittingSetInstance {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t k_prime = 0;

  /// Throws std::invalid_argument unless m >= 1, every set is nonempty with
  /// elements in [1, n], and 1 <= k' <= n.
  void validate() const;

  /// `n m k'` then m lines of elements.
  static HittingSetInstance parse(std::string_view text);
  std::string str() const;
};

/// Does some k-subset of [1, bound] form a pseudoperiod of x?
struct PseudoperiodInstance {
  Word x;
  std::size_t k = 1;
  std::size_t bound = 1;

  /// Word line, then `k B`.
  static PseudoperiodInstance parse(std::string_view text);
  std::string str() const;
};

/// x = u v w z_1 ... z_m with u = 11 0^{4n+3}, v = 101 0^{4n+3},
/// w = 1001 0^{4n+3}, z_i = 1 (000 a_{1,i}) ... (000 a_{n,i}) 0000 (0011)^n 0,
/// a_{l,i} = [l in S_i]; k = k' + 4 and B = 4n + 5.
PseudoperiodInstance build_pp_instance(const HittingSetInstance& h);

/// Raised instead of starting a search over more than the allowed number of
/// subsets.
class ExplosionError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct SolverLimits {
  std::uint64_t max_subsets = 10'000'000;
};

/// Lexicographically least solution, or nullopt.
std::optional<PpTuple> solve_pseudoperiod(const PseudoperiodInstance& inst, const SolverLimits& limits = {});

/// Lexicographically least hitting set of size k' (sorted), or nullopt.
std::optional<std::vector<std::size_t>> solve_hitting_set(const HittingSetInstance& h,
                                                          const SolverLimits& limits = {});

/// A solution that lacks the forced offsets {1, 2, 3, 4n+4}, or whose
/// multiples of 4 do not hit every set.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H = {p/4 : p in P, 4 <= p <= 4n, 4 | p}, padded with the smallest unused
/// elements up to size k'. Throws StructuralError as described above.
std::vector<std::size_t> extract_hitting_set(const HittingSetInstance& h, const PpTuple& solution);

/// {1, 2, 3, 4n+4} together with 4h for h in H.
PpTuple pseudoperiod_from_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& hitting_set);

bool is_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& candidate);

}  // namespace ppw
