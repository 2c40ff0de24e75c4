#include "knapsack/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

namespace knapsack {

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t n, std::size_t trial) {
  return mix_seed(mix_seed(seed_base, n), trial);
}

TrialRecord run_trial(std::size_t n, std::uint64_t seed, const TrialGrid& grid) {
  const auto start = std::chrono::steady_clock::now();
  const SchemeParams params = SchemeParams::desk(n);
  const KeyPair keys = keygen(params, seed);

  SeededRng rng(mix_seed(seed, 2));
  Bytes message(grid.message_bytes);
  for (auto& byte : message) byte = static_cast<std::uint8_t>(rng.uniform_u64(0, 255));
  const Ciphertext ct = encrypt(keys.pub, message);
  const AttackReport report = full_attack(keys.pub, ct, grid.attack);
  const auto stop = std::chrono::steady_clock::now();

  TrialRecord rec;
  rec.n = n;
  rec.seed = seed;
  // Success is only counted for a validated plaintext equal to the original.
  rec.success = report.success && report.validation && report.plaintext == message;
  rec.reported_success = report.success;
  rec.validation = report.validation;
  rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  rec.candidates = report.candidates_tried;
  rec.selection_ok = selection_is_superincreasing(keys.priv, ct.d_prime, params);
  rec.swaps = report.lll_swaps;
  return rec;
}

std::vector<TrialRecord> run_grid(const TrialGrid& grid) {
  if (grid.trials_per_point == 0) throw InvalidInput("trials_per_point must be >= 1");
  struct Job {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t n : grid.n_values) {
    for (std::size_t t = 0; t < grid.trials_per_point; ++t) {
      jobs.push_back({n, trial_seed(grid.seed_base, n, t)});
    }
  }
  std::vector<TrialRecord> records(jobs.size());
  unsigned threads = grid.threads == 0 ? std::thread::hardware_concurrency() : grid.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      records[i] = run_trial(jobs[i].n, jobs[i].seed, grid);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<double>> times;
  for (const auto& rec : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) { return r.n == rec.n; });
    if (it == rows.end()) {
      rows.push_back(SummaryRow{rec.n});
      times.emplace_back();
      it = rows.end() - 1;
    }
    const auto idx = static_cast<std::size_t>(it - rows.begin());
    ++it->trials;
    if (rec.success) ++it->successes;
    times[idx].push_back(rec.wall_ms);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& t = times[i];
    std::sort(t.begin(), t.end());
    const std::size_t mid = t.size() / 2;
    rows[i].median_ms = t.size() % 2 ? t[mid] : (t[mid - 1] + t[mid]) / 2.0;
    rows[i].success_rate = static_cast<double>(rows[i].successes) / static_cast<double>(rows[i].trials);
  }
  return rows;
}

std::optional<double> scaling_slope(const std::vector<SummaryRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (r.n > 0 && r.median_ms > 0) pts.emplace_back(std::log(double(r.n)), std::log(r.median_ms));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= double(pts.size());
  my /= double(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "n,seed,success,wall_ms,candidates,selection_ok,swaps\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.seed << ',' << (r.success ? 1 : 0) << ',' << r.wall_ms << ','
        << r.candidates << ',' << (r.selection_ok ? 1 : 0) << ',' << r.swaps << '\n';
  }
}

}  // namespace knapsack
