#include "knapsack/numeric.hpp"

#include <cctype>

namespace knapsack {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw FormatError("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw FormatError("negative denominator: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw FormatError("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer round_half_up(const Rational& value) {
  return floor_of(value + Rational(1, 2));
}

Rational abs_of(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Integer pow2(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer ceil_sqrt(const Integer& value) {
  if (value < 0) throw InvalidInput("ceil_sqrt of a negative value");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  if (root * root < value) ++root;
  return root;
}

std::uint64_t SeededRng::uniform_u64(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvalidInput("uniform_u64: empty range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return next_u64();
  const std::uint64_t range = span + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + x % range;
}

Integer SeededRng::uniform_below(const Integer& bound) {
  if (bound < 1) throw InvalidInput("uniform_below: bound must be positive");
  const std::size_t bits = bit_length(bound - 1);
  if (bits == 0) return 0;
  const std::size_t words = (bits + 63) / 64;
  const Integer mask = pow2(bits) - 1;
  for (;;) {
    Integer candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      candidate <<= 64;
      const std::uint64_t w = next_u64();
      candidate += Integer(static_cast<unsigned long>(w >> 32)) << 32;
      candidate += static_cast<unsigned long>(w & 0xffffffffULL);
    }
    candidate &= mask;
    if (candidate < bound) return candidate;
  }
}

Integer SeededRng::uniform_range(const Integer& lo, const Integer& hi) {
  if (lo > hi) throw InvalidInput("uniform_range: empty range");
  return lo + uniform_below(hi - lo + 1);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace knapsack
