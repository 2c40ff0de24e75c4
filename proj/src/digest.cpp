#include "knapsack/digest.hpp"

#include <openssl/evp.h>

#include <memory>

namespace knapsack {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

}  // namespace

Digest1024 digest_1024(std::span<const std::uint8_t> message, std::string_view hash_id) {
  if (hash_id != kDefaultHashId) {
    throw InvalidInput("unknown hash_id '" + std::string(hash_id) + "'");
  }
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx) throw Error("EVP_MD_CTX_new failed");

  Digest1024 out{};
  for (std::uint32_t ctr = 0; ctr < 4; ++ctr) {
    const std::uint8_t counter[4] = {
        static_cast<std::uint8_t>(ctr >> 24), static_cast<std::uint8_t>(ctr >> 16),
        static_cast<std::uint8_t>(ctr >> 8), static_cast<std::uint8_t>(ctr)};
    unsigned int len = 0;
    if (EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), message.data(), message.size()) != 1 ||
        EVP_DigestUpdate(ctx.get(), counter, sizeof counter) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out.data() + 32 * ctr, &len) != 1 || len != 32) {
      throw Error("SHA-256 computation failed");
    }
  }
  return out;
}

Integer digest_to_integer(const Digest1024& digest) {
  Integer value;
  mpz_import(value.get_mpz_t(), digest.size(), 1, 1, 1, 0, digest.data());
  return value;
}

}  // namespace knapsack
