#pragma once

// Seeded attack experiments over a grid of key sizes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "knapsack/attack.hpp"

namespace knapsack {

struct TrialGrid {
  std::vector<std::size_t> n_values;
  std::size_t trials_per_point = 1;
  std::uint64_t seed_base = 0;
  /// Message length in bytes for every trial.
  std::size_t message_bytes = 4;
  AttackConfig attack;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct TrialRecord {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Validated and equal to the original message.
  bool success = false;
  /// What the attack itself reported, before comparing with the message.
  bool reported_success = false;
  bool validation = false;
  double wall_ms = 0.0;
  std::size_t candidates = 0;
  bool selection_ok = false;
  std::uint64_t swaps = 0;
};

/// Deterministic per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t n, std::size_t trial);

/// keygen -> random message -> encrypt -> full_attack for one trial.
TrialRecord run_trial(std::size_t n, std::uint64_t seed, const TrialGrid& grid);

/// Records ordered by (n as listed, trial index) regardless of threading.
std::vector<TrialRecord> run_grid(const TrialGrid& grid);

struct SummaryRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double median_ms = 0.0;
};

/// One row per distinct n, in first-appearance order.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

/// Least-squares slope of log(median_ms) against log(n); nullopt with fewer
/// than two usable points.
std::optional<double> scaling_slope(const std::vector<SummaryRow>& rows);

/// Columns n,seed,success,wall_ms,candidates,selection_ok,swaps.
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);

}  // namespace knapsack
