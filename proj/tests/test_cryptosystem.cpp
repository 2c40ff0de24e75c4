#include <string>

#include "doctest.h"
#include "knapsack/cryptosystem.hpp"
#include "support/oracles.hpp"

using namespace knapsack;

namespace {

SchemeParams params_of(std::size_t n, std::size_t subsets, std::size_t take) {
  SchemeParams p;
  p.n = n;
  p.subsets = subsets;
  p.group_size = n / subsets;
  p.take = take;
  return p;
}

Bytes bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

SuperIncreasingSequence example_b() { return SuperIncreasingSequence({2, 3, 7, 15, 31}); }

}  // namespace

TEST_CASE("worked key example") {
  const auto kp = make_keypair(params_of(5, 1, 5), example_b(), 17, 61);
  CHECK(kp.pub.a == std::vector<Integer>{34, 51, 58, 11, 39});
  CHECK(kp.priv.w_inv == 18);
  CHECK(oracle::slow_inverse(17, 61) == 18);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(kp.pub.a[i] == oracle::slow_mulmod(kp.priv.b[i], 17, 61));
  }
}

TEST_CASE("make_keypair rejects bad private values") {
  const auto params = params_of(5, 1, 5);
  CHECK_THROWS_AS(make_keypair(params, example_b(), 17, 58), InvalidInput);  // p <= sum
  CHECK_THROWS_AS(make_keypair(params, example_b(), 0, 61), InvalidInput);
  CHECK_THROWS_AS(make_keypair(params, example_b(), 61, 61), InvalidInput);
  CHECK_THROWS_AS(make_keypair(params, example_b(), 2, 62), InvalidInput);  // gcd 2
  CHECK_THROWS_AS(make_keypair(params_of(6, 1, 3), example_b(), 17, 61), InvalidInput);
}

TEST_CASE("w = 1 leaves the weights unchanged") {
  const auto kp = make_keypair(params_of(5, 1, 5), example_b(), 1, 61);
  CHECK(kp.pub.a == std::vector<Integer>{2, 3, 7, 15, 31});
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(SchemeParams{}.validate());
  CHECK(SchemeParams{}.block_bits() == 1024);
  CHECK_THROWS_AS(params_of(10, 3, 1).validate(), InvalidInput);
  auto p = params_of(10, 2, 6);
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.take = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  const auto d = SchemeParams::desk(16);
  CHECK(d.subsets == 2);
  CHECK(d.group_size == 8);
  CHECK(d.take == 4);
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("selection") {
  const auto params = params_of(6, 1, 3);
  CHECK(select_indices(0, params) == std::vector<std::size_t>{0, 1, 2});
  CHECK(select_indices(100, params) == std::vector<std::size_t>{0, 5, 1});
  CHECK_THROWS_AS(select_indices(720, params), OutOfRange);

  // Two groups: the same permutation applies to each.
  const auto two = params_of(12, 2, 3);
  CHECK(select_indices(100, two) == std::vector<std::size_t>{0, 5, 1, 6, 11, 7});
  const std::vector<Integer> v{10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21};
  CHECK(select_weights(v, 100, two) == std::vector<Integer>{10, 15, 11, 16, 21, 17});
}

TEST_CASE("digest golden values") {
  CHECK(digest_to_dprime(bytes_of("abc"), params_of(8, 1, 4)) == 20174);
  CHECK(digest_to_dprime(Bytes{}, params_of(12, 1, 4)) == 98366419);
  CHECK(digest_to_dprime(bytes_of("abc"), SchemeParams{}) ==
        Integer("337372606496851018380426821823786184500551460617574807875046694423004394892300240827684"
                "485390832720542615755777971207465056960255714357795320727702208555082566574848939656"
                "512336261853532951907288209848114082547422201168861221606360965481789317697226983933"
                "955269710924936248096577659208573984087510030353614"));
  auto bad = params_of(8, 1, 4);
  bad.hash_id = "md5";
  CHECK_THROWS_AS(digest_to_dprime(bytes_of("abc"), bad), InvalidInput);
}

TEST_CASE("message blocks") {
  const auto blocks = message_to_blocks(Bytes{0x80, 0x01}, 8);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == Bits{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(blocks[1] == Bits{0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(message_to_blocks(Bytes{}, 8).size() == 1);
  const auto padded = message_to_blocks(Bytes{0xff}, 12);
  REQUIRE(padded.size() == 1);
  CHECK(padded[0] == Bits{1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0});
  CHECK(blocks_to_message(padded, 1) == Bytes{0xff});
  CHECK_THROWS_AS(blocks_to_message(padded, 2), CorruptCiphertext);
}

TEST_CASE("encryption of trivial blocks") {
  const auto kp = make_keypair(params_of(5, 1, 5), example_b(), 17, 61);
  const Bytes zero{0};
  const Ciphertext ct = encrypt(kp.pub, zero);
  REQUIRE(ct.blocks.size() == 2);
  CHECK(ct.blocks[0] == 0);
  CHECK(ct.blocks[1] == 0);
  CHECK(decrypt(kp.priv, kp.pub.params, ct) == zero);

  // 0x80: only the first selected weight is used.
  const Bytes high{0x80};
  const Ciphertext one = encrypt(kp.pub, high);
  const auto sel = select_indices(one.d_prime, kp.pub.params);
  CHECK(one.blocks[0] == kp.pub.a[sel[0]]);
  CHECK(decrypt(kp.priv, kp.pub.params, one) == high);
}

TEST_CASE("solve_selected works in key order") {
  // Selection order (7, 2, 31) is not super-increasing, key order is.
  const std::vector<Integer> w{7, 2, 31};
  const std::vector<std::size_t> idx{2, 0, 4};
  CHECK(solve_selected(w, idx, 33) == Bits{0, 1, 1});
  CHECK(solve_selected(w, idx, 9) == Bits{1, 1, 0});
  CHECK_FALSE(solve_selected(w, idx, 4).has_value());
  const std::vector<Integer> bad{7, 9, 31};
  CHECK_THROWS_AS(solve_selected(bad, idx, 7), KeyIncompatibility);
}

TEST_CASE("round trip on small keys") {
  const auto params = params_of(24, 2, 8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto kp = keygen(params, seed);
    SeededRng rng(seed + 1000);
    Bytes msg(rng.uniform_u64(0, 9));
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng.uniform_u64(0, 255));
    const Ciphertext ct = encrypt(kp.pub, msg);
    CHECK(ct.msg_len_bytes == msg.size());
    CHECK(decrypt(kp.priv, params, ct) == msg);
  }
}

TEST_CASE("tampering is detected") {
  const auto params = params_of(24, 2, 8);
  const auto kp = keygen(params, 3);
  const Bytes msg = bytes_of("hello");
  Ciphertext ct = encrypt(kp.pub, msg);
  SUBCASE("block") {
    ct.blocks[0] += 1;
    CHECK_THROWS_AS(decrypt(kp.priv, params, ct), CorruptCiphertext);
  }
  SUBCASE("d_prime") {
    ct.d_prime = (ct.d_prime + 1) % factorial(params.group_size);
    CHECK_THROWS_AS(decrypt(kp.priv, params, ct), CorruptCiphertext);
  }
  SUBCASE("length") {
    ct.msg_len_bytes = 100;
    CHECK_THROWS_AS(decrypt(kp.priv, params, ct), CorruptCiphertext);
  }
  SUBCASE("wrong key") {
    const auto other = keygen(params, 4);
    CHECK_THROWS(decrypt(other.priv, params, ct));
  }
}

TEST_CASE("keygen invariants and duality") {
  const auto params = params_of(48, 4, 6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto kp = keygen(params, seed);
    CHECK_NOTHROW(check_private_key(kp.priv, params));
    CHECK(mpz_probab_prime_p(kp.priv.p.get_mpz_t(), 30) > 0);
    CHECK(kp.priv.p > kp.priv.b.total());
    CHECK((kp.priv.w * kp.priv.w_inv) % kp.priv.p == 1);
    const Integer dp = digest_to_dprime(bytes_of("x" + std::to_string(seed)), params);
    const std::vector<Integer> b(kp.priv.b.weights().begin(), kp.priv.b.weights().end());
    const auto Au = select_weights(kp.pub.a, dp, params);
    const auto Bu = select_weights(b, dp, params);
    for (std::size_t i = 0; i < Au.size(); ++i) {
      CHECK(Au[i] == Bu[i] * kp.priv.w % kp.priv.p);
      CHECK(Bu[i] == Au[i] * kp.priv.w_inv % kp.priv.p);
    }
    CHECK(keygen(params, seed).pub.a == kp.pub.a);
  }
}

TEST_CASE("paper-size key") {
  const auto kp = keygen(SchemeParams{}, 1);
  CHECK(kp.pub.a.size() == 1360);
  CHECK_NOTHROW(check_private_key(kp.priv, SchemeParams{}));
  const Bytes msg = bytes_of("paper scale");
  CHECK(decrypt(kp.priv, SchemeParams{}, encrypt(kp.pub, msg)) == msg);
}
