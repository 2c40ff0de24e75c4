#include "knapsack/attack.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "knapsack/permutation.hpp"

namespace knapsack {

void AttackConfig::validate() const {
  if (ell_sweep.empty()) throw InvalidInput("ell sweep is empty");
  for (const auto& lambda : lambda_sweep) {
    if (lambda <= 0) throw InvalidInput("lambda must be positive");
  }
  if (max_candidates == 0) throw InvalidInput("max_candidates must be >= 1");
}

std::vector<Rational> lambda_sweep_from_exponents(long lo, long hi) {
  if (lo > hi) throw InvalidInput("lambda exponent range is empty");
  std::vector<Rational> out;
  for (long e = lo; e <= hi; ++e) {
    out.push_back(e >= 0 ? Rational(1, pow2(static_cast<unsigned long>(e)))
                         : Rational(pow2(static_cast<unsigned long>(-e))));
  }
  return out;
}

std::vector<Rational> default_lambda_sweep(std::size_t n) {
  constexpr int kCount = 16;
  const double top = static_cast<double>(std::max<std::size_t>(n, 1));
  std::set<unsigned long> exponents;
  for (int j = 0; j < kCount; ++j) {
    exponents.insert(static_cast<unsigned long>(std::lround(1.0 + j * (top - 1.0) / (kCount - 1))));
  }
  std::vector<Rational> out;
  for (unsigned long e : exponents) out.emplace_back(Rational(1, pow2(e)));
  return out;
}

LatticeBasis build_attack_lattice(std::span<const Integer> a, const Rational& lambda) {
  if (a.size() < 2) throw InvalidInput("attack lattice needs at least two weights");
  if (lambda <= 0) throw InvalidInput("lambda must be positive");
  for (const auto& ai : a) {
    if (ai < 1) throw InvalidInput("public weights must be positive");
  }
  const std::size_t l = a.size();
  Matrix rows(l, Vector(l, Rational(0)));
  rows[0][0] = lambda;
  for (std::size_t i = 1; i < l; ++i) {
    rows[0][i] = a[i];
    rows[i][i] = -a[0];
  }
  return LatticeBasis(std::move(rows));
}

std::vector<CandidateMultiplier> recover_multiplier_candidates(const PublicKey& pk,
                                                               const AttackConfig& config,
                                                               LllStats* stats) {
  config.validate();
  const std::size_t n = pk.a.size();
  const std::vector<Rational> lambdas =
      config.lambda_sweep.empty() ? default_lambda_sweep(n) : config.lambda_sweep;
  std::vector<CandidateMultiplier> found;
  if (n < 2 || pk.a[0] < 1) return found;
  const Integer& a1 = pk.a[0];

  for (std::size_t ell : config.ell_sweep) {
    if (ell < 2 || ell > n) continue;
    const std::span<const Integer> head(pk.a.data(), ell);
    if (std::any_of(head.begin(), head.end(), [](const Integer& x) { return x < 1; })) continue;
    for (const Rational& lambda : lambdas) {
      const LatticeBasis reduced = lll_reduce(build_attack_lattice(head, lambda), Rational(3, 4), stats);
      for (Vector v : reduced.rows()) {
        if (v[0] == 0) continue;
        if (v[0] < 0) {
          for (auto& x : v) x = -x;
        }
        const Rational k1_rat = v[0] / lambda;
        if (k1_rat.get_den() != 1) continue;
        CandidateMultiplier cand;
        cand.k1 = k1_rat.get_num();
        bool integral = true;
        for (std::size_t i = 1; i < ell && integral; ++i) {
          // v_i = k_1 a_i - k_i a_1
          const Rational ki = (Rational(cand.k1 * pk.a[i]) - v[i]) / Rational(a1);
          integral = ki.get_den() == 1;
          if (integral) cand.ks.push_back(ki.get_num());
        }
        if (!integral) continue;
        cand.source_norm_sq = norm_sq(v);
        cand.source = std::move(v);
        cand.ell = ell;
        cand.lambda = lambda;
        found.push_back(std::move(cand));
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.source_norm_sq != y.source_norm_sq) return x.source_norm_sq < y.source_norm_sq;
    return x.k1 < y.k1;
  });
  std::vector<CandidateMultiplier> out;
  std::set<Integer> seen;
  for (auto& cand : found) {
    if (out.size() >= config.max_candidates) break;
    if (seen.insert(cand.k1).second) out.push_back(std::move(cand));
  }
  return out;
}

std::optional<EquivalentKey> derive_equivalent_key(const PublicKey& pk, const Integer& U_prime,
                                                   const Integer& p_prime) {
  if (U_prime < 1 || p_prime < 2 || pk.a.empty()) return std::nullopt;
  std::vector<Integer> b_prime;
  b_prime.reserve(pk.a.size());
  for (const auto& ai : pk.a) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), Integer(ai * U_prime).get_mpz_t(), p_prime.get_mpz_t());
    b_prime.push_back(std::move(r));
  }
  if (!is_superincreasing(b_prime)) return std::nullopt;
  return EquivalentKey{U_prime, p_prime, SuperIncreasingSequence(std::move(b_prime))};
}

Rational simplest_rational_between(const Rational& lo, const std::optional<Rational>& hi) {
  if (hi && !(lo < *hi)) throw InvalidInput("empty interval");
  const Integer base = floor_of(lo);
  const Rational next(base + 1);
  if (!hi || next < *hi) return next;
  // No integer inside: base <= lo < hi <= base + 1. Recurse on reciprocals.
  const Rational frac_lo = lo - Rational(base);
  const Rational frac_hi = *hi - Rational(base);
  const std::optional<Rational> inner_hi =
      frac_lo == 0 ? std::nullopt : std::optional<Rational>(1 / frac_lo);
  const Rational inner = simplest_rational_between(1 / frac_hi, inner_hi);
  return Rational(base) + 1 / inner;
}

namespace {

struct OpenInterval {
  Rational lo;
  std::optional<Rational> hi;
  bool empty() const { return hi && !(lo < *hi); }
};

// Ratios x inside `window` at which U' a_i - k_i p' behaves like the private
// weights: every a_i x - k_i in (0, 1), the values super-increasing, and
// their sum below 1. All constraints are linear in x.
OpenInterval feasible_ratios(std::span<const Integer> a, std::span<const Integer> ks,
                             OpenInterval window) {
  auto raise = [&](const Rational& bound) { window.lo = std::max(window.lo, bound); };
  auto lower = [&](const Rational& bound) {
    if (!window.hi || bound < *window.hi) window.hi = bound;
  };
  Integer sum_a = 0;
  Integer sum_k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    raise(make_rational(ks[i], a[i]));
    lower(make_rational(ks[i] + 1, a[i]));
    // a_i x - k_i > Σ_{j<i} (a_j x - k_j)
    const Integer coeff = a[i] - sum_a;
    const Integer rhs = ks[i] - sum_k;
    if (coeff > 0) {
      raise(make_rational(rhs, coeff));
    } else if (coeff < 0) {
      lower(make_rational(rhs, coeff));
    } else if (rhs >= 0) {
      window.hi = window.lo;
      return window;
    }
    sum_a += a[i];
    sum_k += ks[i];
  }
  lower(make_rational(sum_k + 1, sum_a));
  return window;
}

constexpr std::size_t kMaxSubintervals = 4096;

}  // namespace

std::optional<std::pair<Integer, Integer>> trapdoor_near_multiplier(const PublicKey& pk,
                                                                    const Integer& k1) {
  const std::size_t n = pk.a.size();
  if (n == 0 || k1 < 1) return std::nullopt;
  for (const auto& ai : pk.a) {
    if (ai < 1) return std::nullopt;
  }
  const Integer& a1 = pk.a[0];

  // U/p - k_1/a_1 = b_1/(a_1 p), and the prefix sums of a super-increasing
  // key at least double, so b_1 < p / 2^{n-1}.
  const Rational start = make_rational(k1, a1);
  const Rational stop = start + make_rational(1, a1 * pow2(n - 1));

  std::vector<Rational> cuts{start, stop};
  for (const auto& ai : pk.a) {
    const Integer first = floor_of(start * Rational(ai)) + 1;
    const Integer last = ceil_of(stop * Rational(ai)) - 1;
    for (Integer j = first; j <= last; ++j) {
      cuts.push_back(make_rational(j, ai));
      if (cuts.size() > kMaxSubintervals) break;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Integer> ks(n);
  for (std::size_t c = 0; c + 1 < cuts.size() && c < kMaxSubintervals; ++c) {
    // floor(a_i x) is constant on (cuts[c], cuts[c+1]).
    const Rational mid = (cuts[c] + cuts[c + 1]) / 2;
    for (std::size_t i = 0; i < n; ++i) ks[i] = floor_of(mid * Rational(pk.a[i]));
    const OpenInterval found = feasible_ratios(pk.a, ks, OpenInterval{cuts[c], cuts[c + 1]});
    if (found.empty()) continue;
    const Rational x = simplest_rational_between(found.lo, found.hi);
    return std::make_pair(Integer(x.get_num()), Integer(x.get_den()));
  }
  return std::nullopt;
}

std::optional<Bytes> attack_decrypt(const PublicKey& pk, const EquivalentKey& eq,
                                    const Ciphertext& ct) {
  const SchemeParams& params = pk.params;
  if (pk.a.size() != params.n || eq.b_prime.size() != params.n) return std::nullopt;
  std::vector<std::size_t> indices;
  try {
    indices = select_indices(ct.d_prime, params);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<Integer> a_sel;
  std::vector<Integer> b_sel;
  for (std::size_t idx : indices) {
    a_sel.push_back(pk.a[idx]);
    b_sel.push_back(eq.b_prime[idx]);
  }
  Integer b_total = 0;
  for (const auto& x : b_sel) b_total += x;
  Integer max_offset;
  mpz_cdiv_q(max_offset.get_mpz_t(), b_total.get_mpz_t(), eq.p_prime.get_mpz_t());

  std::vector<Bits> blocks;
  for (const Integer& c : ct.blocks) {
    Integer reduced;
    mpz_fdiv_r(reduced.get_mpz_t(), Integer(c * eq.U_prime).get_mpz_t(), eq.p_prime.get_mpz_t());
    std::optional<Bits> accepted;
    for (Integer m = 0; m <= max_offset && !accepted; ++m) {
      const Integer target = reduced + m * eq.p_prime;
      if (target > b_total) break;
      auto bits = solve_selected(b_sel, indices, target);
      if (bits && subset_sum(a_sel, *bits) == c) accepted = std::move(bits);
    }
    if (!accepted) return std::nullopt;
    blocks.push_back(std::move(*accepted));
  }
  try {
    return blocks_to_message(blocks, ct.msg_len_bytes);
  } catch (const CorruptCiphertext&) {
    return std::nullopt;
  }
}

AttackReport full_attack(const PublicKey& pk, const Ciphertext& ct, const AttackConfig& config) {
  AttackReport report;
  report.config_used = config;
  if (report.config_used.lambda_sweep.empty()) {
    report.config_used.lambda_sweep = default_lambda_sweep(pk.a.size());
  }
  LllStats stats;
  const auto candidates = recover_multiplier_candidates(pk, report.config_used, &stats);
  report.lll_swaps = stats.swaps;
  report.candidates_found = candidates.size();

  for (const auto& cand : candidates) {
    ++report.candidates_tried;
    std::vector<std::pair<Integer, Integer>> pairs{{cand.k1, pk.a[0]}};
    if (auto refined = trapdoor_near_multiplier(pk, cand.k1)) pairs.push_back(std::move(*refined));
    for (const auto& [U_prime, p_prime] : pairs) {
      auto eq = derive_equivalent_key(pk, U_prime, p_prime);
      if (!eq) continue;
      auto plaintext = attack_decrypt(pk, *eq, ct);
      if (!plaintext) continue;
      if (encrypt(pk, *plaintext) != ct) continue;
      report.success = true;
      report.validation = true;
      report.equivalent_key = std::move(eq);
      report.plaintext = std::move(plaintext);
      report.winning_k1 = cand.k1;
      return report;
    }
  }
  return report;
}

MultiplierBoundCheck check_multiplier_bounds(const PublicKey& pk, const PrivateKey& sk) {
  MultiplierBoundCheck check;
  const std::size_t n = pk.a.size();
  if (n == 0) return check;
  std::vector<Integer> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = (pk.a[i] * sk.w_inv - sk.b[i]) / sk.p;
  check.true_k1 = k[0];
  for (std::size_t i = 1; i < n; ++i) {
    Integer lhs = pk.a[i] * k[0] - pk.a[0] * k[i];
    if (lhs < 0) lhs = -lhs;
    // 1-based index i+1: bound p / 2^{n-(i+1)-1}
    const long exponent = static_cast<long>(n) - static_cast<long>(i) - 2;
    const Rational bound = exponent >= 0 ? make_rational(sk.p, pow2(static_cast<unsigned long>(exponent)))
                                         : Rational(sk.p * pow2(static_cast<unsigned long>(-exponent)));
    ++check.checked;
    if (!(Rational(lhs) < bound)) ++check.violations;
  }
  return check;
}

}  // namespace knapsack
