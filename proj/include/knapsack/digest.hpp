#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "knapsack/numeric.hpp"

namespace knapsack {

inline constexpr std::string_view kDefaultHashId = "sha256-ctr4";

using Digest1024 = std::array<std::uint8_t, 128>;

/// "sha256-ctr4": SHA-256(message || ctr) for a 32-bit big-endian counter
/// ctr = 0..3, the four outputs concatenated. Throws InvalidInput for any
/// other hash id.
Digest1024 digest_1024(std::span<const std::uint8_t> message, std::string_view hash_id);

/// The digest read as a big-endian unsigned integer.
Integer digest_to_integer(const Digest1024& digest);

}  // namespace knapsack
