#pragma once

// JSON file formats. Big integers and rationals are always decimal
// strings ("123", "-7/9"). Readers throw FormatError naming the field.

#include <filesystem>

#include "json.hpp"
#include "knapsack/attack.hpp"
#include "knapsack/cryptosystem.hpp"
#include "knapsack/diophantine.hpp"
#include "knapsack/lattice.hpp"

namespace knapsack {

using Json = nlohmann::json;

Json to_json(const SchemeParams& params);
SchemeParams params_from_json(const Json& j);

/// {"params":{...},"a":["<dec>",...]}
Json to_json(const PublicKey& pk);
PublicKey public_key_from_json(const Json& j);

/// {"b":[...],"w":"<dec>","w_inv":"<dec>","p":"<dec>"}
Json to_json(const PrivateKey& sk);
PrivateKey private_key_from_json(const Json& j);

/// {"blocks":["<dec>",...],"d_prime":"<dec>","msg_len_bytes":N}
Json to_json(const Ciphertext& ct);
Ciphertext ciphertext_from_json(const Json& j);

/// {"rows":[["p/q",...],...]}
Json matrix_to_json(const Matrix& rows);
Matrix matrix_from_json(const Json& j);

/// {"alphas":["p/q",...],"epsilon":"p/q"} plus optional "Q".
SdaProblem sda_problem_from_json(const Json& j);
Json to_json(const SdaProblem& problem, const SdaSolution& solution);

Json to_json(const AttackReport& report);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace knapsack
