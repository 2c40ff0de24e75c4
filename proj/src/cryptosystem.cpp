#include "knapsack/cryptosystem.hpp"

#include <algorithm>
#include <numeric>

#include "knapsack/permutation.hpp"

namespace knapsack {

void SchemeParams::validate() const {
  if (subsets == 0 || group_size == 0) throw InvalidInput("subsets and group_size must be >= 1");
  if (n != subsets * group_size) throw InvalidInput("n must equal subsets * group_size");
  if (take == 0 || take > group_size) throw InvalidInput("take must be in [1, group_size]");
}

SchemeParams SchemeParams::desk(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("desk params need an even n >= 4");
  SchemeParams params;
  params.n = n;
  params.subsets = 2;
  params.group_size = n / 2;
  params.take = n / 4 == 0 ? 1 : n / 4;
  return params;
}

namespace {

Integer next_prime_above(const Integer& floor_value) {
  Integer candidate = floor_value + 1;
  if (candidate <= 2) return 2;
  if (mpz_even_p(candidate.get_mpz_t())) ++candidate;
  while (mpz_probab_prime_p(candidate.get_mpz_t(), 64) == 0) candidate += 2;
  return candidate;
}

Integer mod_inverse(const Integer& value, const Integer& modulus) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvalidInput("multiplier is not invertible modulo p");
  }
  return inv;
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

void check_private_key(const PrivateKey& key, const SchemeParams& params) {
  if (key.b.size() != params.n) throw InvalidInput("private key length does not match n");
  if (key.p <= key.b.total()) throw InvalidInput("modulus p must exceed the sum of b");
  if (key.w < 1 || key.w >= key.p) throw InvalidInput("multiplier w must lie in [1, p-1]");
  Integer g;
  mpz_gcd(g.get_mpz_t(), key.w.get_mpz_t(), key.p.get_mpz_t());
  if (g != 1) throw InvalidInput("gcd(w, p) must be 1");
  if (mod_floor(key.w * key.w_inv, key.p) != 1) throw InvalidInput("w * w_inv mod p must be 1");
}

KeyPair make_keypair(const SchemeParams& params, SuperIncreasingSequence b, const Integer& w,
                     const Integer& p) {
  params.validate();
  if (w < 1 || w >= p) throw InvalidInput("multiplier w must lie in [1, p-1]");
  PrivateKey priv{std::move(b), w, mod_inverse(w, p), p};
  check_private_key(priv, params);

  PublicKey pub;
  pub.params = params;
  pub.a.reserve(params.n);
  for (const auto& bi : priv.b.weights()) pub.a.push_back(mod_floor(bi * priv.w, priv.p));
  return KeyPair{std::move(pub), std::move(priv)};
}

KeyPair keygen(const SchemeParams& params, std::uint64_t seed) {
  params.validate();
  SuperIncreasingSequence b = generate_superincreasing(params.n, params.slack_bits, seed);
  const Integer p = next_prime_above(b.total());
  SeededRng rng(mix_seed(seed, 1));
  const Integer w = rng.uniform_range(2, p - 1);
  return make_keypair(params, std::move(b), w, p);
}

std::vector<std::size_t> select_indices(const Integer& d_prime, const SchemeParams& params) {
  params.validate();
  const LehmerCode code = factorial_carry(d_prime, params.group_size);
  const std::vector<std::size_t> order = permutation_order(code);
  std::vector<std::size_t> indices;
  indices.reserve(params.block_bits());
  for (std::size_t group = 0; group < params.subsets; ++group) {
    const std::size_t base = group * params.group_size;
    for (std::size_t i = 0; i < params.take; ++i) indices.push_back(base + order[i]);
  }
  return indices;
}

std::vector<Integer> select_weights(std::span<const Integer> vector, const Integer& d_prime,
                                    const SchemeParams& params) {
  if (vector.size() != params.n) throw InvalidInput("select_weights: vector length must be n");
  std::vector<Integer> out;
  for (std::size_t idx : select_indices(d_prime, params)) out.push_back(vector[idx]);
  return out;
}

Integer digest_to_dprime(std::span<const std::uint8_t> message, const SchemeParams& params) {
  const Integer d = digest_to_integer(digest_1024(message, params.hash_id));
  return mod_floor(d, factorial(params.group_size));
}

std::vector<Bits> message_to_blocks(std::span<const std::uint8_t> message, std::size_t block_bits) {
  if (block_bits == 0) throw InvalidInput("block_bits must be positive");
  const std::size_t total_bits = message.size() * 8;
  const std::size_t count = std::max<std::size_t>(1, (total_bits + block_bits - 1) / block_bits);
  std::vector<Bits> blocks(count, Bits(block_bits, 0));
  for (std::size_t bit = 0; bit < total_bits; ++bit) {
    const std::uint8_t byte = message[bit / 8];
    blocks[bit / block_bits][bit % block_bits] = (byte >> (7 - bit % 8)) & 1u;
  }
  return blocks;
}

Bytes blocks_to_message(std::span<const Bits> blocks, std::size_t msg_len_bytes) {
  std::size_t available = 0;
  for (const auto& block : blocks) available += block.size();
  if (msg_len_bytes * 8 > available) {
    throw CorruptCiphertext("message length exceeds the decoded blocks");
  }
  Bytes out(msg_len_bytes, 0);
  std::size_t bit = 0;
  for (const auto& block : blocks) {
    for (std::uint8_t x : block) {
      if (bit >= msg_len_bytes * 8) return out;
      if (x) out[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      ++bit;
    }
  }
  return out;
}

Ciphertext encrypt(const PublicKey& pk, std::span<const std::uint8_t> message) {
  const SchemeParams& params = pk.params;
  params.validate();
  Ciphertext ct;
  ct.d_prime = digest_to_dprime(message, params);
  ct.msg_len_bytes = message.size();
  const std::vector<Integer> selected = select_weights(pk.a, ct.d_prime, params);
  for (const Bits& block : message_to_blocks(message, params.block_bits())) {
    ct.blocks.push_back(subset_sum(selected, block));
  }
  return ct;
}

std::optional<Bits> solve_selected(std::span<const Integer> weights,
                                   std::span<const std::size_t> indices, const Integer& target) {
  if (weights.size() != indices.size()) throw InvalidInput("solve_selected: length mismatch");
  std::vector<std::size_t> by_key(weights.size());
  std::iota(by_key.begin(), by_key.end(), std::size_t{0});
  std::sort(by_key.begin(), by_key.end(),
            [&](std::size_t x, std::size_t y) { return indices[x] < indices[y]; });

  std::vector<Integer> ordered;
  ordered.reserve(weights.size());
  for (std::size_t pos : by_key) ordered.push_back(weights[pos]);
  if (!is_superincreasing(ordered)) {
    throw KeyIncompatibility("selected weights are not super-increasing in key order");
  }
  if (target < 0) return std::nullopt;
  const auto ordered_bits =
      solve_superincreasing(SuperIncreasingSequence(std::move(ordered)), target);
  if (!ordered_bits) return std::nullopt;

  Bits bits(weights.size(), 0);
  for (std::size_t k = 0; k < by_key.size(); ++k) bits[by_key[k]] = (*ordered_bits)[k];
  return bits;
}

Bytes decrypt(const PrivateKey& sk, const SchemeParams& params, const Ciphertext& ct) {
  params.validate();
  if (sk.b.size() != params.n) throw KeyIncompatibility("private key length does not match n");
  const std::vector<std::size_t> indices = select_indices(ct.d_prime, params);
  const std::vector<Integer> selected = select_weights(sk.b.weights(), ct.d_prime, params);

  std::vector<Bits> blocks;
  blocks.reserve(ct.blocks.size());
  for (std::size_t k = 0; k < ct.blocks.size(); ++k) {
    const Integer target = mod_floor(ct.blocks[k] * sk.w_inv, sk.p);
    auto bits = solve_selected(selected, indices, target);
    if (!bits) throw CorruptCiphertext("block " + std::to_string(k) + " does not decode");
    blocks.push_back(std::move(*bits));
  }
  Bytes message = blocks_to_message(blocks, ct.msg_len_bytes);
  if (digest_to_dprime(message, params) != ct.d_prime) {
    throw CorruptCiphertext("recovered message does not match the ciphertext digest");
  }
  return message;
}

bool selection_is_superincreasing(const PrivateKey& sk, const Integer& d_prime,
                                  const SchemeParams& params) {
  return is_superincreasing(select_weights(sk.b.weights(), d_prime, params));
}

}  // namespace knapsack
