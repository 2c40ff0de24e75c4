#pragma once

// Simultaneous Diophantine approximation by lattice reduction: find one
// denominator q and numerators p_i with |a_i - p_i/q| <= eps/q for all i.

#include <optional>
#include <vector>

#include "knapsack/lattice.hpp"
#include "knapsack/numeric.hpp"

namespace knapsack {

struct SdaProblem {
  std::vector<Rational> alphas;
  Rational epsilon;
  /// Scaling bound; default_sda_bound() when built with make().
  Integer Q;

  /// Throws InvalidInput unless 0 < epsilon < 1, alphas is non-empty and
  /// Q >= 1.
  void validate() const;

  static SdaProblem make(std::vector<Rational> alphas, Rational epsilon);
};

struct SdaSolution {
  Integer q;
  std::vector<Integer> ps;
  /// max_i |q a_i - p_i|, i.e. max_i |a_i - p_i/q| * q.
  Rational quality;
  /// Squared norm of the reduced-basis row the solution was read from.
  Rational row_norm_sq;
};

/// ceil(2^{n(n+1)/4} * eps^{-n}).
Integer default_sda_bound(std::size_t n, const Rational& epsilon);

/// Rows (eps/Q, a_1, ..., a_n) followed by -1 on the diagonal.
LatticeBasis build_sda_lattice(const SdaProblem& problem);

/// 0 < q < 2^{n(n+1)/4} eps^{-(n+1)} and |a_i - p_i/q| <= eps/q for all i,
/// compared exactly.
bool satisfies_sda_bounds(const SdaProblem& problem, const Integer& q, const std::vector<Integer>& ps);

/// Scans the reduced basis in order and returns the first row whose
/// implied (q, p) passes satisfies_sda_bounds, or nullopt.
std::optional<SdaSolution> solve_sda(const SdaProblem& problem);

}  // namespace knapsack
