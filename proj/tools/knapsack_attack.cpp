// knapsack-attack: key generation, encryption, decryption, lattice tools and
// the key-recovery attack over JSON files.
//
// Exit codes: 0 success, 1 operation failed (e.g. attack unsuccessful,
// ciphertext does not decode), 2 usage error or malformed input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "knapsack/attack.hpp"
#include "knapsack/bench.hpp"
#include "knapsack/cryptosystem.hpp"
#include "knapsack/diophantine.hpp"
#include "knapsack/lattice.hpp"
#include "knapsack/serialization.hpp"

namespace {

using namespace knapsack;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_bytes(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not a list of counts: '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

std::vector<Rational> parse_lambda_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    const long lo = std::stol(text.substr(0, colon));
    const long hi = std::stol(text.substr(colon + 1));
    return lambda_sweep_from_exponents(lo, hi);
  } catch (const std::exception&) {
    throw UsageError("--lambda-exp-range expects LO:HI with LO <= HI, got '" + text + "'");
  }
}

struct KeygenArgs {
  SchemeParams params;
  std::uint64_t seed = 1;
  std::string pub_path, priv_path;
};

int run_keygen(const KeygenArgs& args) {
  try {
    args.params.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  const KeyPair keys = keygen(args.params, args.seed);
  write_json_file(args.pub_path, to_json(keys.pub));
  Json priv = to_json(keys.priv);
  priv["params"] = to_json(args.params);
  write_json_file(args.priv_path, priv);
  std::cout << "generated n=" << args.params.n << " key (p has " << bit_length(keys.priv.p)
            << " bits)\n";
  return 0;
}

struct CryptArgs {
  std::string key_path, in_path, out_path;
};

int run_encrypt(const CryptArgs& args) {
  const PublicKey pk = public_key_from_json(read_json_file(args.key_path));
  const Ciphertext ct = encrypt(pk, read_bytes(args.in_path));
  write_json_file(args.out_path, to_json(ct));
  std::cout << "encrypted " << ct.msg_len_bytes << " bytes into " << ct.blocks.size() << " blocks\n";
  return 0;
}

int run_decrypt(const CryptArgs& args, const std::string& pub_path) {
  const Json priv_json = read_json_file(args.key_path);
  const PrivateKey sk = private_key_from_json(priv_json);
  SchemeParams params;
  if (!pub_path.empty()) {
    params = public_key_from_json(read_json_file(pub_path)).params;
  } else if (priv_json.contains("params")) {
    params = params_from_json(priv_json.at("params"));
  } else {
    throw UsageError("scheme parameters needed: pass --pub or use a key file with 'params'");
  }
  const Ciphertext ct = ciphertext_from_json(read_json_file(args.in_path));
  try {
    if (params.n != sk.b.size()) throw KeyIncompatibility("private key length does not match n");
    check_private_key(sk, params);
    const Bytes message = decrypt(sk, params, ct);
    write_bytes(args.out_path, message);
    std::cout << "decrypted " << message.size() << " bytes\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "decryption failed: " << e.what() << '\n';
    return kExitFailure;
  }
}

struct AttackArgs {
  std::string pub_path, ct_path, report_path, out_path;
  std::string ell_sweep, lambda_range;
  std::size_t max_candidates = 0;
};

AttackConfig make_config(const AttackArgs& args) {
  AttackConfig config;
  if (!args.ell_sweep.empty()) config.ell_sweep = parse_size_list(args.ell_sweep, "--ell-sweep");
  if (!args.lambda_range.empty()) config.lambda_sweep = parse_lambda_range(args.lambda_range);
  if (args.max_candidates > 0) config.max_candidates = args.max_candidates;
  return config;
}

int run_attack(const AttackArgs& args) {
  const PublicKey pk = public_key_from_json(read_json_file(args.pub_path));
  const Ciphertext ct = ciphertext_from_json(read_json_file(args.ct_path));
  const AttackReport report = full_attack(pk, ct, make_config(args));
  if (!args.report_path.empty()) write_json_file(args.report_path, to_json(report));
  std::cout << "candidates found: " << report.candidates_found
            << ", tried: " << report.candidates_tried << ", LLL swaps: " << report.lll_swaps << '\n';
  if (!report.success) {
    std::cout << "ATTACK FAILED\n";
    return kExitFailure;
  }
  if (!args.out_path.empty()) write_bytes(args.out_path, *report.plaintext);
  std::cout << "equivalent key U'=" << to_decimal(report.equivalent_key->U_prime)
            << " p'=" << to_decimal(report.equivalent_key->p_prime) << '\n';
  std::cout << "ATTACK SUCCEEDED\n";
  return 0;
}

int run_lll(const std::string& in_path, const std::string& out_path, const std::string& delta_text) {
  Rational delta(3, 4);
  try {
    if (!delta_text.empty()) delta = parse_rational(delta_text);
    if (delta <= Rational(1, 4) || delta >= 1) throw InvalidInput("delta must lie in (1/4, 1)");
  } catch (const Error& e) {
    throw UsageError(std::string("--delta: ") + e.what());
  }
  Matrix rows = matrix_from_json(read_json_file(in_path));
  LatticeBasis basis = [&] {
    try {
      return LatticeBasis(std::move(rows));
    } catch (const Error& e) {
      throw UsageError(std::string("field 'rows': ") + e.what());
    }
  }();
  LllStats stats;
  const LatticeBasis reduced = lll_reduce(basis, delta, &stats);
  write_json_file(out_path, matrix_to_json(reduced.rows()));
  std::cout << "reduced rank " << reduced.rank() << " basis with " << stats.swaps << " swaps\n";
  return 0;
}

int run_sda(const std::string& in_path, const std::string& out_path) {
  const SdaProblem problem = sda_problem_from_json(read_json_file(in_path));
  const auto solution = solve_sda(problem);
  if (!solution) {
    std::cout << "no admissible approximation found\n";
    return kExitFailure;
  }
  write_json_file(out_path, to_json(problem, *solution));
  std::cout << "q = " << to_decimal(solution->q) << '\n';
  return 0;
}

struct BenchArgs {
  std::string n_values = "16,24,32";
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t message_bytes = 4;
  unsigned threads = 0;
  std::string csv_path;
};

int run_bench(const BenchArgs& args) {
  TrialGrid grid;
  grid.n_values = parse_size_list(args.n_values, "--n-values");
  for (std::size_t n : grid.n_values) {
    if (n < 4 || n % 2) throw UsageError("--n-values entries must be even and >= 4");
  }
  if (args.trials == 0) throw UsageError("--trials must be >= 1");
  grid.trials_per_point = args.trials;
  grid.seed_base = args.seed;
  grid.message_bytes = args.message_bytes;
  grid.threads = args.threads;
  const auto records = run_grid(grid);
  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path);
    if (!out) throw UsageError("cannot write '" + args.csv_path + "'");
    write_csv(out, records);
  }
  std::cout << "n,trials,successes,success_rate,median_ms\n";
  for (const auto& row : summarize(records)) {
    std::cout << row.n << ',' << row.trials << ',' << row.successes << ',' << row.success_rate << ','
              << row.median_ms << '\n';
  }
  if (auto slope = scaling_slope(summarize(records))) {
    std::cout << "log-log slope of median time vs n: " << *slope << '\n';
  }
  return 0;
}

int run_demo(std::uint64_t seed, std::size_t n) {
  if (n < 4 || n % 2) throw UsageError("--n must be even and >= 4");
  const SchemeParams params = SchemeParams::desk(n);
  const KeyPair keys = keygen(params, seed);
  std::cout << "key: n=" << n << ", " << params.subsets << " groups of " << params.group_size
            << ", taking " << params.take << " per group (" << params.block_bits() << "-bit blocks)\n";
  std::cout << "private modulus p = " << to_decimal(keys.priv.p) << '\n';

  const std::string text = "attack at dawn";
  const Bytes message(text.begin(), text.end());
  const Ciphertext ct = encrypt(keys.pub, message);
  std::cout << "message \"" << text << "\" -> " << ct.blocks.size() << " blocks, D' = "
            << to_decimal(ct.d_prime) << '\n';

  const AttackReport report = full_attack(keys.pub, ct, AttackConfig{});
  std::cout << "lattice candidates: " << report.candidates_found << " found, "
            << report.candidates_tried << " tried, " << report.lll_swaps << " LLL swaps\n";
  if (!report.success) {
    std::cout << "ATTACK FAILED\n";
    return kExitFailure;
  }
  const auto& eq = *report.equivalent_key;
  std::cout << "multiplier k1 = " << to_decimal(*report.winning_k1) << " (true U = "
            << to_decimal(keys.priv.w_inv) << ")\n";
  std::cout << "equivalent trapdoor U' = " << to_decimal(eq.U_prime) << ", p' = "
            << to_decimal(eq.p_prime) << '\n';
  std::cout << "recovered: \"" << std::string(report.plaintext->begin(), report.plaintext->end())
            << "\" (re-encryption matches: " << (report.validation ? "yes" : "no") << ")\n";
  std::cout << "ATTACK SUCCEEDED\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-combination knapsack cryptosystem and lattice key-recovery attack"};
  app.require_subcommand(1);

  KeygenArgs keygen_args;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--n", keygen_args.params.n, "Total number of weights");
  keygen_cmd->add_option("--subsets", keygen_args.params.subsets, "Number of weight groups");
  keygen_cmd->add_option("--group-size", keygen_args.params.group_size, "Weights per group");
  keygen_cmd->add_option("--take", keygen_args.params.take, "Weights selected per group");
  keygen_cmd->add_option("--slack-bits", keygen_args.params.slack_bits, "Random offset bits per weight");
  keygen_cmd->add_option("--seed", keygen_args.seed, "Random seed");
  keygen_cmd->add_option("--pub", keygen_args.pub_path, "Public key output")->required();
  keygen_cmd->add_option("--priv", keygen_args.priv_path, "Private key output")->required();

  CryptArgs enc_args;
  auto* enc_cmd = app.add_subcommand("encrypt", "Encrypt a file");
  enc_cmd->add_option("--pub", enc_args.key_path, "Public key")->required();
  enc_cmd->add_option("--in", enc_args.in_path, "Plaintext file")->required();
  enc_cmd->add_option("--out", enc_args.out_path, "Ciphertext JSON output")->required();

  CryptArgs dec_args;
  std::string dec_pub;
  auto* dec_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext");
  dec_cmd->add_option("--priv", dec_args.key_path, "Private key")->required();
  dec_cmd->add_option("--pub", dec_pub, "Public key, if the private key file lacks 'params'");
  dec_cmd->add_option("--in", dec_args.in_path, "Ciphertext JSON")->required();
  dec_cmd->add_option("--out", dec_args.out_path, "Plaintext output")->required();

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand("attack", "Recover the plaintext from the public key alone");
  attack_cmd->add_option("--pubkey", attack_args.pub_path, "Public key")->required();
  attack_cmd->add_option("--ciphertext", attack_args.ct_path, "Ciphertext JSON")->required();
  attack_cmd->add_option("--ell-sweep", attack_args.ell_sweep, "Comma-separated lattice sizes l");
  attack_cmd->add_option("--lambda-exp-range", attack_args.lambda_range,
                         "LO:HI, sweeping lambda = 2^-e for e in [LO, HI]");
  attack_cmd->add_option("--max-candidates", attack_args.max_candidates, "Cap on candidates examined");
  attack_cmd->add_option("--json-report", attack_args.report_path, "Write the attack report");
  attack_cmd->add_option("--out", attack_args.out_path, "Write the recovered plaintext");

  std::string lll_in, lll_out, lll_delta;
  auto* lll_cmd = app.add_subcommand("lll", "LLL-reduce a rational basis");
  lll_cmd->add_option("--in", lll_in, "Matrix JSON")->required();
  lll_cmd->add_option("--out", lll_out, "Reduced matrix JSON")->required();
  lll_cmd->add_option("--delta", lll_delta, "Lovasz parameter p/q in (1/4, 1), default 3/4");

  std::string sda_in, sda_out;
  auto* sda_cmd = app.add_subcommand("sda", "Simultaneous Diophantine approximation");
  sda_cmd->add_option("--in", sda_in, "Problem JSON")->required();
  sda_cmd->add_option("--out", sda_out, "Solution JSON")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Seeded attack success-rate experiment");
  bench_cmd->add_option("--n-values", bench_args.n_values, "Comma-separated key sizes");
  bench_cmd->add_option("--trials", bench_args.trials, "Trials per key size");
  bench_cmd->add_option("--seed", bench_args.seed, "Seed base");
  bench_cmd->add_option("--message-bytes", bench_args.message_bytes, "Message length per trial");
  bench_cmd->add_option("--threads", bench_args.threads, "Worker threads, 0 = all cores");
  bench_cmd->add_option("--csv", bench_args.csv_path, "Per-trial CSV output");

  std::uint64_t demo_seed = 7;
  std::size_t demo_n = 16;
  auto* demo_cmd = app.add_subcommand("demo", "Key generation, encryption and attack end to end");
  demo_cmd->add_option("--seed", demo_seed, "Random seed");
  demo_cmd->add_option("--n", demo_n, "Key size (even)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*keygen_cmd) return run_keygen(keygen_args);
    if (*enc_cmd) return run_encrypt(enc_args);
    if (*dec_cmd) return run_decrypt(dec_args, dec_pub);
    if (*attack_cmd) return run_attack(attack_args);
    if (*lll_cmd) return run_lll(lll_in, lll_out, lll_delta);
    if (*sda_cmd) return run_sda(sda_in, sda_out);
    if (*bench_cmd) return run_bench(bench_args);
    if (*demo_cmd) return run_demo(demo_seed, demo_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knapsack::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
