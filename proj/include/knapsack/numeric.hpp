#pragma once

// Arbitrary-precision number types, the error hierarchy shared by every
// module, and the seeded random source used by key generation and the
// benchmark harness.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knapsack {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments that violate an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A lattice basis whose rows are linearly dependent.
class RankDeficiency : public Error {
 public:
  using Error::Error;
};

/// A ciphertext block that does not decode under the supplied key.
class CorruptCiphertext : public Error {
 public:
  using Error::Error;
};

class KeyIncompatibility : public Error {
 public:
  using Error::Error;
};

/// Malformed external data (JSON files, rational literals). The message
/// names the offending field.
class FormatError : public Error {
 public:
  using Error::Error;
};

Integer parse_integer(std::string_view text);
/// Accepts "p/q" or "p"; the result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_decimal(const Integer& value);
std::string to_string(const Rational& value);

/// num/den in canonical form; throws InvalidInput when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
/// floor(1/2 + value): round half up.
Integer round_half_up(const Rational& value);

Rational abs_of(const Rational& value);
Integer pow2(unsigned long exponent);
std::size_t bit_length(const Integer& value);
Integer factorial(unsigned long n);

/// Smallest integer r with r*r >= value, value >= 0.
Integer ceil_sqrt(const Integer& value);

/// Deterministic random source. The engine is fully specified by the
/// standard, and all range reductions are done here so results do not
/// depend on the library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [lo, hi], lo <= hi.
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi);
  /// Uniform in [0, bound), bound >= 1.
  Integer uniform_below(const Integer& bound);
  /// Uniform in [lo, hi], lo <= hi.
  Integer uniform_range(const Integer& lo, const Integer& hi);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, for deriving independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace knapsack
