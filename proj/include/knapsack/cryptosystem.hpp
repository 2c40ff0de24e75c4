#pragma once

// Permutation-combination knapsack cryptosystem.
//
// The public key a_i = b_i * w mod p disguises a super-increasing private
// sequence b. Each message digest selects a permutation (through its
// factorial-base digits) that is applied to every group of g weights; the
// first t weights of each permuted group form the s*t knapsack used for
// every block of the message.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "knapsack/digest.hpp"
#include "knapsack/knapsack_core.hpp"
#include "knapsack/numeric.hpp"

namespace knapsack {

using Bytes = std::vector<std::uint8_t>;

struct SchemeParams {
  std::size_t n = 1360;
  std::size_t subsets = 8;
  std::size_t group_size = 170;
  std::size_t take = 128;
  unsigned slack_bits = 8;
  std::string hash_id = std::string(kDefaultHashId);

  std::size_t block_bits() const { return subsets * take; }
  /// Throws InvalidInput unless n = subsets * group_size and
  /// 1 <= take <= group_size.
  void validate() const;

  /// Small instances for tests and the attack benchmark: two groups of n/2,
  /// taking half of each group.
  static SchemeParams desk(std::size_t n);

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

struct PrivateKey {
  SuperIncreasingSequence b;
  Integer w;
  Integer w_inv;
  Integer p;
};

struct PublicKey {
  std::vector<Integer> a;
  SchemeParams params;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct Ciphertext {
  std::vector<Integer> blocks;
  Integer d_prime;
  std::size_t msg_len_bytes = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// p is the smallest prime above Σ b (64 Miller-Rabin rounds), w is drawn
/// from [2, p-1], and a_i = b_i * w mod p. Fully determined by the seed.
KeyPair keygen(const SchemeParams& params, std::uint64_t seed);

/// Builds a key pair from explicit private values. Throws InvalidInput if
/// p <= Σ b, w is outside [1, p-1], or gcd(w, p) != 1.
KeyPair make_keypair(const SchemeParams& params, SuperIncreasingSequence b, const Integer& w,
                     const Integer& p);

/// Throws InvalidInput naming the first violated private-key invariant.
void check_private_key(const PrivateKey& key, const SchemeParams& params);

/// Indices into the length-n key vector that make up the selected
/// knapsack, in selection order: group by group, the first `take` entries
/// of the group permuted by the factorial digits of d_prime.
/// Throws OutOfRange when d_prime >= group_size!.
std::vector<std::size_t> select_indices(const Integer& d_prime, const SchemeParams& params);

std::vector<Integer> select_weights(std::span<const Integer> vector, const Integer& d_prime,
                                    const SchemeParams& params);

/// D' = H_1024(message) mod group_size!.
Integer digest_to_dprime(std::span<const std::uint8_t> message, const SchemeParams& params);

/// Zero-padded to a multiple of block_bits, most significant bit first.
std::vector<Bits> message_to_blocks(std::span<const std::uint8_t> message, std::size_t block_bits);
/// Inverse of message_to_blocks; throws CorruptCiphertext if msg_len_bytes
/// exceeds the bits available.
Bytes blocks_to_message(std::span<const Bits> blocks, std::size_t msg_len_bytes);

Ciphertext encrypt(const PublicKey& pk, std::span<const std::uint8_t> message);

/// Throws CorruptCiphertext when a block does not decode.
Bytes decrypt(const PrivateKey& sk, const SchemeParams& params, const Ciphertext& ct);

/// Solves one block against the selected weights. `indices` are the key
/// positions the weights came from; the greedy scan runs in key order, in
/// which any subset of a super-increasing key is itself super-increasing.
/// Returns bits in selection order, or nullopt when the target is not a
/// subset sum. Throws KeyIncompatibility if the weights in key order are
/// not super-increasing.
std::optional<Bits> solve_selected(std::span<const Integer> weights,
                                   std::span<const std::size_t> indices, const Integer& target);

/// Whether the selected private weights, in selection order, are themselves
/// super-increasing. Recorded by the benchmark harness.
bool selection_is_superincreasing(const PrivateKey& sk, const Integer& d_prime,
                                  const SchemeParams& params);

}  // namespace knapsack
