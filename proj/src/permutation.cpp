#include "knapsack/permutation.hpp"

#include <numeric>
#include <string>

namespace knapsack {

LehmerCode::LehmerCode(std::vector<std::size_t> digits) : digits_(std::move(digits)) {
  const std::size_t n = digits_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (digits_[i] > n - 1 - i) {
      throw InvalidInput("Lehmer digit " + std::to_string(i + 1) + " exceeds n-i");
    }
  }
}

LehmerCode factorial_carry(const Integer& m, std::size_t n) {
  if (m < 0) throw OutOfRange("factorial_carry: negative index");
  if (m >= factorial(n)) throw OutOfRange("factorial_carry: index must be below n!");
  std::vector<std::size_t> digits(n, 0);
  Integer remainder = m;
  Integer radix = n == 0 ? Integer(1) : factorial(n - 1);
  Integer digit;
  for (std::size_t i = 0; i < n; ++i) {
    // radix = (n-1-i)!
    mpz_fdiv_qr(digit.get_mpz_t(), remainder.get_mpz_t(), remainder.get_mpz_t(),
                radix.get_mpz_t());
    digits[i] = digit.get_ui();
    if (n - 1 - i > 0) radix /= static_cast<unsigned long>(n - 1 - i);
  }
  return LehmerCode(std::move(digits));
}

Integer lehmer_to_index(const LehmerCode& code) {
  // Horner form of Σ u_i (n-i)!.
  const auto digits = code.digits();
  const std::size_t n = digits.size();
  Integer m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    m = m * static_cast<unsigned long>(n - i) + static_cast<unsigned long>(digits[i]);
  }
  return m;
}

std::vector<std::size_t> permutation_order(const LehmerCode& code) {
  std::vector<std::size_t> remaining(code.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> order;
  order.reserve(code.size());
  for (std::size_t u : code.digits()) {
    order.push_back(remaining[u]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(u));
  }
  return order;
}

}  // namespace knapsack
