#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "knapsack/numeric.hpp"

namespace knapsack {

using Bits = std::vector<std::uint8_t>;

/// True iff every weight is positive and each exceeds the sum of all
/// weights before it. Throws InvalidInput on an empty list.
bool is_superincreasing(std::span<const Integer> weights);

/// An ordered list of positive weights, each larger than the sum of its
/// predecessors. Immutable once constructed.
class SuperIncreasingSequence {
 public:
  /// Throws InvalidInput unless `weights` is super-increasing.
  explicit SuperIncreasingSequence(std::vector<Integer> weights);

  std::span<const Integer> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Integer& operator[](std::size_t i) const { return weights_[i]; }
  Integer total() const;

  friend bool operator==(const SuperIncreasingSequence&, const SuperIncreasingSequence&) = default;

 private:
  std::vector<Integer> weights_;
};

struct SubsetSumInstance {
  std::vector<Integer> weights;
  Integer target;
};

/// Each weight is the running sum plus an offset drawn uniformly from
/// [1, 2^slack_bits]; the first weight is drawn from the same range.
SuperIncreasingSequence generate_superincreasing(std::size_t n, unsigned slack_bits,
                                                 std::uint64_t seed);

/// Greedy decoder: scan from the largest weight down, taking a weight
/// whenever it fits in the residual. Returns nullopt when the residual is
/// nonzero after the scan, i.e. `target` is not a subset sum.
std::optional<Bits> solve_superincreasing(const SuperIncreasingSequence& seq, const Integer& target);

/// Same, for weights not yet wrapped; throws InvalidInput if they are not
/// super-increasing.
std::optional<Bits> solve_superincreasing(std::span<const Integer> weights, const Integer& target);

/// Σ bits_i · weights_i.
Integer subset_sum(std::span<const Integer> weights, std::span<const std::uint8_t> bits);

/// n / log2(max weight), with log2 truncated to 64 fractional bits.
/// Throws InvalidInput when the list is empty or the max weight is < 2.
Rational density(std::span<const Integer> weights);

}  // namespace knapsack
