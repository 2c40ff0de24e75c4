#pragma once

// Factorial number system: converting an integer m < n! to its digits
// (u_1 ... u_n) with m = Σ u_i (n-i)!, and using those digits to pick a
// permutation by repeatedly selecting from the remaining items.

#include <span>
#include <vector>

#include "knapsack/numeric.hpp"

namespace knapsack {

class LehmerCode {
 public:
  /// Throws InvalidInput unless 0 <= digits[i] <= n-1-i for 0-based i.
  explicit LehmerCode(std::vector<std::size_t> digits);

  static LehmerCode identity(std::size_t n) { return LehmerCode(std::vector<std::size_t>(n, 0)); }

  std::span<const std::size_t> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<std::size_t> digits_;
};

/// Greedy division: u_i = floor(r_{i-1} / (n-i)!). Throws OutOfRange when
/// m >= n! or m < 0.
LehmerCode factorial_carry(const Integer& m, std::size_t n);

/// Σ u_i (n-i)!, the inverse of factorial_carry.
Integer lehmer_to_index(const LehmerCode& code);

/// Output position i receives input index order[i].
std::vector<std::size_t> permutation_order(const LehmerCode& code);

/// For i = 1..n emit the (u_i+1)-th element among those not yet taken.
template <typename T>
std::vector<T> permute(std::span<const T> elements, const LehmerCode& code) {
  if (elements.size() != code.size()) {
    throw InvalidInput("permute: element count does not match code length");
  }
  std::vector<T> out;
  out.reserve(elements.size());
  for (std::size_t idx : permutation_order(code)) out.push_back(elements[idx]);
  return out;
}

}  // namespace knapsack
