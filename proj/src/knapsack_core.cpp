#include "knapsack/knapsack_core.hpp"

#include <algorithm>

namespace knapsack {

bool is_superincreasing(std::span<const Integer> weights) {
  if (weights.empty()) throw InvalidInput("is_superincreasing: empty weight list");
  Integer prefix = 0;
  for (const auto& w : weights) {
    if (w <= 0 || w <= prefix) return false;
    prefix += w;
  }
  return true;
}

SuperIncreasingSequence::SuperIncreasingSequence(std::vector<Integer> weights)
    : weights_(std::move(weights)) {
  if (!is_superincreasing(weights_)) {
    throw InvalidInput("weights are not super-increasing");
  }
}

Integer SuperIncreasingSequence::total() const {
  Integer sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

SuperIncreasingSequence generate_superincreasing(std::size_t n, unsigned slack_bits,
                                                 std::uint64_t seed) {
  if (n == 0) throw InvalidInput("generate_superincreasing: n must be >= 1");
  if (slack_bits > 4096) throw InvalidInput("generate_superincreasing: slack_bits too large");
  SeededRng rng(seed);
  const Integer top = pow2(slack_bits);
  std::vector<Integer> weights;
  weights.reserve(n);
  Integer prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer w = prefix + rng.uniform_range(1, top);
    prefix += w;
    weights.push_back(std::move(w));
  }
  return SuperIncreasingSequence(std::move(weights));
}

std::optional<Bits> solve_superincreasing(const SuperIncreasingSequence& seq,
                                          const Integer& target) {
  if (target < 0) throw InvalidInput("solve_superincreasing: negative target");
  const auto weights = seq.weights();
  Bits bits(weights.size(), 0);
  Integer residual = target;
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (residual >= weights[i]) {
      bits[i] = 1;
      residual -= weights[i];
    }
  }
  if (residual != 0) return std::nullopt;
  return bits;
}

std::optional<Bits> solve_superincreasing(std::span<const Integer> weights,
                                          const Integer& target) {
  return solve_superincreasing(
      SuperIncreasingSequence(std::vector<Integer>(weights.begin(), weights.end())), target);
}

Integer subset_sum(std::span<const Integer> weights, std::span<const std::uint8_t> bits) {
  if (weights.size() != bits.size()) throw InvalidInput("subset_sum: length mismatch");
  Integer sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (bits[i]) sum += weights[i];
  }
  return sum;
}

namespace {

// floor(2^64 * log2(x)) for x >= 1. The fraction is produced one bit at a
// time by repeated squaring of x / 2^k held in fixed point with generous
// guard bits.
Integer log2_fixed64(const Integer& x) {
  constexpr unsigned kFracBits = 64;
  constexpr unsigned kWork = 256;
  const std::size_t k = bit_length(x) - 1;
  Integer y = x;  // y / 2^kWork in [1, 2)
  if (k > kWork) {
    y >>= (k - kWork);
  } else {
    y <<= (kWork - k);
  }
  const Integer two = pow2(kWork + 1);
  Integer frac = 0;
  for (unsigned i = 0; i < kFracBits; ++i) {
    y = (y * y) >> kWork;
    frac <<= 1;
    if (y >= two) {
      frac += 1;
      y >>= 1;
    }
  }
  return (Integer(static_cast<unsigned long>(k)) << kFracBits) + frac;
}

}  // namespace

Rational density(std::span<const Integer> weights) {
  if (weights.empty()) throw InvalidInput("density: empty weight list");
  const Integer& max_weight = *std::max_element(weights.begin(), weights.end());
  if (max_weight < 2) throw InvalidInput("density: max weight must be >= 2");
  const Integer log2_scaled = log2_fixed64(max_weight);
  return make_rational(Integer(static_cast<unsigned long>(weights.size())) * pow2(64), log2_scaled);
}

}  // namespace knapsack
