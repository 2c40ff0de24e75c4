#include <string>

#include "doctest.h"
#include "knapsack/attack.hpp"

using namespace knapsack;

namespace {

SchemeParams single_group(std::size_t n, std::size_t take) {
  SchemeParams p;
  p.n = n;
  p.subsets = 1;
  p.group_size = n;
  p.take = take;
  return p;
}

Bytes bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("attack lattice layout") {
  const std::vector<Integer> a{5, 7, 11};
  const auto L = build_attack_lattice(a, Rational(1, 4));
  CHECK(L.rows() == Matrix{{Rational(1, 4), 7, 11}, {0, -5, 0}, {0, 0, -5}});
  CHECK(lattice_determinant(L) == Rational(25, 4));
  CHECK_THROWS_AS(build_attack_lattice(std::vector<Integer>{5}, Rational(1)), InvalidInput);
  CHECK_THROWS_AS(build_attack_lattice(a, Rational(0)), InvalidInput);
  CHECK_THROWS_AS(build_attack_lattice(std::vector<Integer>{5, 0}, Rational(1)), InvalidInput);
}

TEST_CASE("lambda sweeps") {
  CHECK(lambda_sweep_from_exponents(1, 3) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK_THROWS_AS(lambda_sweep_from_exponents(3, 1), InvalidInput);
  const auto sweep = default_lambda_sweep(32);
  CHECK(sweep.size() == 16);
  CHECK(sweep.front() == Rational(1, 2));
  CHECK(sweep.back() == Rational(1, pow2(32)));
  CHECK(default_lambda_sweep(4).size() == 4);
  AttackConfig bad;
  bad.max_candidates = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  bad = AttackConfig{};
  bad.ell_sweep.clear();
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("equivalent key from the true trapdoor") {
  const auto kp = make_keypair(single_group(5, 5), SuperIncreasingSequence({2, 3, 7, 15, 31}), 17, 61);
  const auto eq = derive_equivalent_key(kp.pub, 18, 61);
  REQUIRE(eq.has_value());
  CHECK(std::vector<Integer>(eq->b_prime.weights().begin(), eq->b_prime.weights().end()) ==
        std::vector<Integer>{2, 3, 7, 15, 31});
  CHECK_FALSE(derive_equivalent_key(kp.pub, 1, 61).has_value());
  CHECK_FALSE(derive_equivalent_key(kp.pub, 0, 61).has_value());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto k = keygen(SchemeParams::desk(24), seed);
    const auto e = derive_equivalent_key(k.pub, k.priv.w_inv, k.priv.p);
    REQUIRE(e.has_value());
    CHECK(e->b_prime == k.priv.b);
  }
}

TEST_CASE("simplest_rational_between") {
  CHECK(simplest_rational_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_rational_between(Rational(0), Rational(1)) == Rational(1, 2));
  CHECK(simplest_rational_between(Rational(5, 2), std::nullopt) == 3);
  CHECK(simplest_rational_between(Rational(3), Rational(7, 2)) == Rational(10, 3));
  CHECK(simplest_rational_between(Rational(31, 100), Rational(32, 100)) == Rational(5, 16));
  CHECK_THROWS_AS(simplest_rational_between(Rational(1), Rational(1)), InvalidInput);
  // Exhaustive check against denominators up to 40.
  for (int lo_n = 0; lo_n < 20; ++lo_n) {
    const Rational lo(lo_n, 20), hi(lo_n + 1, 20);
    const Rational s = simplest_rational_between(lo, hi);
    CHECK(lo < s);
    CHECK(s < hi);
    for (int q = 1; q < s.get_den().get_si(); ++q) {
      for (int p = 0; p <= q; ++p) {
        const Rational r(p, q);
        CHECK_FALSE((lo < r && r < hi));
      }
    }
  }
}

TEST_CASE("candidates satisfy the lattice identity") {
  const auto kp = keygen(SchemeParams::desk(16), 7);
  AttackConfig config;
  const auto cands = recover_multiplier_candidates(kp.pub, config);
  REQUIRE_FALSE(cands.empty());
  CHECK(cands.size() <= config.max_candidates);
  for (const auto& c : cands) {
    CHECK(c.source[0] == c.lambda * Rational(c.k1));
    for (std::size_t i = 1; i < c.ell; ++i) {
      CHECK(c.source[i] == Rational(c.k1 * kp.pub.a[i] - c.ks[i - 1] * kp.pub.a[0]));
    }
  }
  for (std::size_t i = 1; i < cands.size(); ++i) {
    CHECK(cands[i - 1].source_norm_sq <= cands[i].source_norm_sq);
  }
}

TEST_CASE("pinned demo instance") {
  const auto kp = keygen(SchemeParams::desk(16), 7);
  const Bytes msg = bytes_of("attack at dawn");
  const auto ct = encrypt(kp.pub, msg);
  const auto report = full_attack(kp.pub, ct, AttackConfig{});
  REQUIRE(report.success);
  CHECK(report.validation);
  CHECK(*report.plaintext == msg);
  CHECK(*report.winning_k1 == 31041);
  CHECK(report.equivalent_key->U_prime == 2793941);
  CHECK(report.equivalent_key->p_prime == 4419127);

  const auto bounds = check_multiplier_bounds(kp.pub, kp.priv);
  CHECK(bounds.checked == 15);
  CHECK(bounds.true_k1 == 31041);
}

TEST_CASE("refinement recovers a trapdoor from the true k1") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto kp = keygen(SchemeParams::desk(24), seed);
    const auto k1 = check_multiplier_bounds(kp.pub, kp.priv).true_k1;
    const auto pair = trapdoor_near_multiplier(kp.pub, k1);
    REQUIRE(pair.has_value());
    CHECK(derive_equivalent_key(kp.pub, pair->first, pair->second).has_value());
  }
}

TEST_CASE("attack on the all-zero message") {
  const auto kp = keygen(SchemeParams::desk(16), 3);
  const Bytes msg(3, 0);
  const auto ct = encrypt(kp.pub, msg);
  const auto report = full_attack(kp.pub, ct, AttackConfig{});
  if (report.success) CHECK(*report.plaintext == msg);
  CHECK(report.success == report.validation);
}

TEST_CASE("attack_decrypt with the true key") {
  const auto kp = keygen(SchemeParams::desk(24), 5);
  const Bytes msg = bytes_of("true key");
  const auto ct = encrypt(kp.pub, msg);
  const EquivalentKey eq{kp.priv.w_inv, kp.priv.p, kp.priv.b};
  CHECK(attack_decrypt(kp.pub, eq, ct) == msg);
}

TEST_CASE("no false success with an unrelated key") {
  const auto target = keygen(SchemeParams::desk(16), 11);
  const auto other = keygen(SchemeParams::desk(16), 12);
  const auto ct = encrypt(target.pub, bytes_of("secret"));
  const EquivalentKey wrong{other.priv.w_inv, other.priv.p, other.priv.b};
  const auto out = attack_decrypt(target.pub, wrong, ct);
  if (out) CHECK(encrypt(target.pub, *out) == ct);  // only a genuine preimage may come back

  // Attacking the wrong public key never reports success.
  const auto report = full_attack(other.pub, ct, AttackConfig{});
  CHECK_FALSE(report.success);
}
