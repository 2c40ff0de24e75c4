#pragma once

// Key-recovery attack on the permutation-combination knapsack scheme.
//
// Step 1 looks for the multiplier k_1 with k_1/a_1 ~ U/p (U = w^{-1} mod p)
// as a short vector of the lattice
//
//     ( lambda  a_2   a_3  ...  a_l )
//     (   0    -a_1    0   ...   0  )
//     (   0     0    -a_1  ...   0  )
//     (  ...                    ... )
//
// and turns it into a trapdoor pair (U', p') whose weights U' a_i mod p'
// are super-increasing. Steps 2 and 3 rebuild the digest-selected knapsack
// from the public D' and solve every block with the equivalent key.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "knapsack/cryptosystem.hpp"
#include "knapsack/lattice.hpp"

namespace knapsack {

struct AttackConfig {
  /// Number of public weights placed in the lattice, 2 <= l <= n. Values
  /// outside that range are skipped.
  std::vector<std::size_t> ell_sweep{4, 6, 8, 10, 12};
  /// Scalings of the first column. Empty means default_lambda_sweep(n).
  std::vector<Rational> lambda_sweep;
  std::size_t max_candidates = 64;

  /// Throws InvalidInput on an empty ell sweep, a non-positive lambda or a
  /// zero candidate cap.
  void validate() const;
};

/// lambda = 2^{-e} for each e in [lo, hi]. Throws InvalidInput if lo > hi.
std::vector<Rational> lambda_sweep_from_exponents(long lo, long hi);

/// Sixteen exponents spread evenly over [1, n], lambda = 2^{-e}.
std::vector<Rational> default_lambda_sweep(std::size_t n);

struct CandidateMultiplier {
  Integer k1;
  /// k_2 ... k_l recovered from the remaining coordinates.
  std::vector<Integer> ks;
  Vector source;
  Rational source_norm_sq;
  std::size_t ell = 0;
  Rational lambda;
};

struct EquivalentKey {
  Integer U_prime;
  Integer p_prime;
  SuperIncreasingSequence b_prime;
};

struct AttackReport {
  bool success = false;
  bool validation = false;
  std::optional<EquivalentKey> equivalent_key;
  std::optional<Bytes> plaintext;
  std::optional<Integer> winning_k1;
  std::size_t candidates_found = 0;
  std::size_t candidates_tried = 0;
  std::uint64_t lll_swaps = 0;
  AttackConfig config_used;
};

/// Throws InvalidInput when fewer than two weights are given, a weight is
/// < 1 or lambda <= 0.
LatticeBasis build_attack_lattice(std::span<const Integer> a, const Rational& lambda);

/// Reduces the attack lattice for every (l, lambda) in the sweeps and reads
/// k_1 = v_1 / lambda off each row with v_1 != 0 (rows taken up to sign).
/// Sorted by source norm then k_1, deduplicated on k_1, capped at
/// max_candidates.
std::vector<CandidateMultiplier> recover_multiplier_candidates(const PublicKey& pk,
                                                               const AttackConfig& config,
                                                               LllStats* stats = nullptr);

/// b'_i = a_i U' mod p'; the key is returned only if b' is super-increasing.
std::optional<EquivalentKey> derive_equivalent_key(const PublicKey& pk, const Integer& U_prime,
                                                   const Integer& p_prime);

/// With p' = a_1 the first weight a_1 k_1 mod a_1 is always zero, so the
/// pair (k_1, a_1) is never usable on its own. The true ratio U/p lies just
/// above k_1/a_1, within 1/(a_1 2^{n-1}). That window is split at the
/// points where some floor(a_i x) changes; on each piece, with k_i fixed,
/// the ratios x = U'/p' for which every a_i x - k_i lies in (0, 1), the
/// values are super-increasing and their sum stays below 1 form an open
/// interval. Returns the rational with the smallest denominator in the
/// first non-empty interval as (U', p'), or nullopt.
std::optional<std::pair<Integer, Integer>> trapdoor_near_multiplier(const PublicKey& pk,
                                                                    const Integer& k1);

/// Simplest rational strictly between lo and hi (0 <= lo < hi); nullopt
/// hi means +infinity.
Rational simplest_rational_between(const Rational& lo, const std::optional<Rational>& hi);

/// Decodes every block with the equivalent key, trying C'_k + m p' for
/// m = 0 .. ceil(Σ B'u / p') and accepting only bit vectors that reproduce
/// C_k under the public weights. nullopt if any block fails.
std::optional<Bytes> attack_decrypt(const PublicKey& pk, const EquivalentKey& eq,
                                    const Ciphertext& ct);

/// Steps 1-3. A plaintext is reported only after re-encrypting it under pk
/// reproduces the ciphertext exactly.
AttackReport full_attack(const PublicKey& pk, const Ciphertext& ct, const AttackConfig& config);

/// Diagnostics for |a_i k_1 - a_1 k_i| < p / 2^{n-i-1} evaluated with the
/// true k_i = (a_i U - b_i) / p.
struct MultiplierBoundCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  Integer true_k1;
};
MultiplierBoundCheck check_multiplier_bounds(const PublicKey& pk, const PrivateKey& sk);

}  // namespace knapsack
