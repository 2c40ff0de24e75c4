#include "knapsack/serialization.hpp"

#include <fstream>

namespace knapsack {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::string string_field(const Json& value, const std::string& name) {
  if (!value.is_string()) throw FormatError("field '" + name + "' must be a string");
  return value.get<std::string>();
}

Integer integer_field(const Json& value, const std::string& name) {
  try {
    return parse_integer(string_field(value, name));
  } catch (const FormatError& e) {
    throw FormatError("field '" + name + "': " + e.what());
  }
}

Rational rational_field(const Json& value, const std::string& name) {
  try {
    return parse_rational(string_field(value, name));
  } catch (const FormatError& e) {
    throw FormatError("field '" + name + "': " + e.what());
  }
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& value = field(j, name);
  if (!value.is_number_unsigned()) {
    throw FormatError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<Integer> integer_array(const Json& j, const char* name) {
  const Json& arr = field(j, name);
  if (!arr.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
  std::vector<Integer> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(integer_field(arr[i], std::string(name) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json integer_array_json(std::span<const Integer> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

Json rational_array_json(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

}  // namespace

Json to_json(const SchemeParams& params) {
  return Json{{"n", params.n},
              {"subsets", params.subsets},
              {"group_size", params.group_size},
              {"take", params.take},
              {"slack_bits", params.slack_bits},
              {"hash_id", params.hash_id}};
}

SchemeParams params_from_json(const Json& j) {
  SchemeParams params;
  params.n = count_field(j, "n");
  params.subsets = count_field(j, "subsets");
  params.group_size = count_field(j, "group_size");
  params.take = count_field(j, "take");
  if (j.contains("slack_bits")) params.slack_bits = static_cast<unsigned>(count_field(j, "slack_bits"));
  if (j.contains("hash_id")) params.hash_id = string_field(j.at("hash_id"), "hash_id");
  try {
    params.validate();
  } catch (const InvalidInput& e) {
    throw FormatError(std::string("field 'params': ") + e.what());
  }
  return params;
}

Json to_json(const PublicKey& pk) {
  return Json{{"params", to_json(pk.params)}, {"a", integer_array_json(pk.a)}};
}

PublicKey public_key_from_json(const Json& j) {
  PublicKey pk;
  pk.params = params_from_json(field(j, "params"));
  pk.a = integer_array(j, "a");
  if (pk.a.size() != pk.params.n) throw FormatError("field 'a' must hold params.n weights");
  return pk;
}

Json to_json(const PrivateKey& sk) {
  return Json{{"b", integer_array_json(sk.b.weights())},
              {"w", to_decimal(sk.w)},
              {"w_inv", to_decimal(sk.w_inv)},
              {"p", to_decimal(sk.p)}};
}

PrivateKey private_key_from_json(const Json& j) {
  std::vector<Integer> b = integer_array(j, "b");
  if (b.empty() || !is_superincreasing(b)) throw FormatError("field 'b' must be super-increasing");
  return PrivateKey{SuperIncreasingSequence(std::move(b)), integer_field(field(j, "w"), "w"),
                    integer_field(field(j, "w_inv"), "w_inv"), integer_field(field(j, "p"), "p")};
}

Json to_json(const Ciphertext& ct) {
  return Json{{"blocks", integer_array_json(ct.blocks)},
              {"d_prime", to_decimal(ct.d_prime)},
              {"msg_len_bytes", ct.msg_len_bytes}};
}

Ciphertext ciphertext_from_json(const Json& j) {
  Ciphertext ct;
  ct.blocks = integer_array(j, "blocks");
  ct.d_prime = integer_field(field(j, "d_prime"), "d_prime");
  ct.msg_len_bytes = count_field(j, "msg_len_bytes");
  if (ct.d_prime < 0) throw FormatError("field 'd_prime' must be non-negative");
  return ct;
}

Json matrix_to_json(const Matrix& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(rational_array_json(r));
  return Json{{"rows", out}};
}

Matrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw FormatError("field 'rows' must be an array");
  Matrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw FormatError("field 'rows[" + std::to_string(i) + "]' must be an array");
    Vector row;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      row.push_back(rational_field(rows[i][k], "rows[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    m.push_back(std::move(row));
  }
  return m;
}

SdaProblem sda_problem_from_json(const Json& j) {
  const Json& arr = field(j, "alphas");
  if (!arr.is_array() || arr.empty()) throw FormatError("field 'alphas' must be a non-empty array");
  std::vector<Rational> alphas;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    alphas.push_back(rational_field(arr[i], "alphas[" + std::to_string(i) + "]"));
  }
  const Rational epsilon = rational_field(field(j, "epsilon"), "epsilon");
  if (epsilon <= 0 || epsilon >= 1) throw FormatError("field 'epsilon' must lie in (0, 1)");
  SdaProblem problem = SdaProblem::make(std::move(alphas), epsilon);
  if (j.contains("Q")) {
    problem.Q = integer_field(j.at("Q"), "Q");
    if (problem.Q < 1) throw FormatError("field 'Q' must be >= 1");
  }
  return problem;
}

Json to_json(const SdaProblem& problem, const SdaSolution& solution) {
  return Json{{"q", to_decimal(solution.q)},
              {"ps", integer_array_json(solution.ps)},
              {"quality", to_string(solution.quality)},
              {"row_norm_sq", to_string(solution.row_norm_sq)},
              {"epsilon", to_string(problem.epsilon)},
              {"Q", to_decimal(problem.Q)}};
}

Json to_json(const AttackReport& report) {
  Json config{{"ell_sweep", report.config_used.ell_sweep},
              {"lambda_sweep", rational_array_json(report.config_used.lambda_sweep)},
              {"max_candidates", report.config_used.max_candidates}};
  Json out{{"success", report.success},
           {"validation", report.validation},
           {"candidates_found", report.candidates_found},
           {"candidates_tried", report.candidates_tried},
           {"lll_swaps", report.lll_swaps},
           {"config_used", config}};
  if (report.winning_k1) out["k1"] = to_decimal(*report.winning_k1);
  if (report.equivalent_key) {
    const auto& eq = *report.equivalent_key;
    out["equivalent_key"] = Json{{"U_prime", to_decimal(eq.U_prime)},
                                 {"p_prime", to_decimal(eq.p_prime)},
                                 {"b_prime", integer_array_json(eq.b_prime.weights())}};
  }
  if (report.plaintext) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (std::uint8_t byte : *report.plaintext) {
      hex.push_back(kHex[byte >> 4]);
      hex.push_back(kHex[byte & 15]);
    }
    out["plaintext_hex"] = hex;
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace knapsack
