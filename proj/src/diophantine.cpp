#include "knapsack/diophantine.hpp"

namespace knapsack {

void SdaProblem::validate() const {
  if (alphas.empty()) throw InvalidInput("SDA problem needs at least one alpha");
  if (epsilon <= 0 || epsilon >= 1) throw InvalidInput("epsilon must lie in (0, 1)");
  if (Q < 1) throw InvalidInput("Q must be >= 1");
}

SdaProblem SdaProblem::make(std::vector<Rational> alphas, Rational epsilon) {
  SdaProblem problem{std::move(alphas), std::move(epsilon), Integer(1)};
  if (problem.epsilon <= 0 || problem.epsilon >= 1) {
    throw InvalidInput("epsilon must lie in (0, 1)");
  }
  problem.Q = default_sda_bound(problem.alphas.size(), problem.epsilon);
  problem.validate();
  return problem;
}

namespace {

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace

Integer default_sda_bound(std::size_t n, const Rational& epsilon) {
  // Q^2 >= 2^{n(n+1)/2} eps^{-2n}; Q is an integer so ceil the rational first.
  const Rational square = Rational(pow2(n * (n + 1) / 2)) / rational_pow(epsilon, 2 * n);
  return ceil_sqrt(ceil_of(square));
}

LatticeBasis build_sda_lattice(const SdaProblem& problem) {
  problem.validate();
  const std::size_t n = problem.alphas.size();
  Matrix rows(n + 1, Vector(n + 1, Rational(0)));
  rows[0][0] = problem.epsilon / Rational(problem.Q);
  for (std::size_t i = 0; i < n; ++i) {
    rows[0][i + 1] = problem.alphas[i];
    rows[i + 1][i + 1] = -1;
  }
  return LatticeBasis(std::move(rows));
}

bool satisfies_sda_bounds(const SdaProblem& problem, const Integer& q, const std::vector<Integer>& ps) {
  const std::size_t n = problem.alphas.size();
  if (ps.size() != n || q <= 0) return false;
  // q < 2^{n(n+1)/4} eps^{-(n+1)}  <=>  q^4 eps^{4(n+1)} < 2^{n(n+1)}
  Integer q4;
  mpz_pow_ui(q4.get_mpz_t(), q.get_mpz_t(), 4);
  if (!(Rational(q4) * rational_pow(problem.epsilon, 4 * (n + 1)) < Rational(pow2(n * (n + 1))))) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (abs_of(Rational(q) * problem.alphas[i] - Rational(ps[i])) > problem.epsilon) return false;
  }
  return true;
}

std::optional<SdaSolution> solve_sda(const SdaProblem& problem) {
  const LatticeBasis reduced = lll_reduce(build_sda_lattice(problem));
  const Rational scale = Rational(problem.Q) / problem.epsilon;
  for (const Vector& v : reduced.rows()) {
    if (v[0] == 0) continue;
    const Rational q_rat = v[0] * scale;
    if (q_rat.get_den() != 1) continue;
    Integer q = q_rat.get_num();
    if (q < 0) q = -q;
    std::vector<Integer> ps;
    ps.reserve(problem.alphas.size());
    Rational quality = 0;
    for (const auto& a : problem.alphas) {
      const Rational qa = Rational(q) * a;
      ps.push_back(round_half_up(qa));
      quality = std::max(quality, abs_of(qa - Rational(ps.back())));
    }
    if (!satisfies_sda_bounds(problem, q, ps)) continue;
    return SdaSolution{std::move(q), std::move(ps), std::move(quality), norm_sq(v)};
  }
  return std::nullopt;
}

}  // namespace knapsack
