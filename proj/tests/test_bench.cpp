#include <sstream>

#include "doctest.h"
#include "knapsack/bench.hpp"

using namespace knapsack;

TEST_CASE("summarize") {
  CHECK(summarize({}).empty());

  std::vector<TrialRecord> recs;
  for (int i = 0; i < 3; ++i) {
    TrialRecord r;
    r.n = 16;
    r.success = true;
    r.wall_ms = 10.0 * (i + 1);
    recs.push_back(r);
  }
  TrialRecord miss;
  miss.n = 24;
  miss.wall_ms = 5;
  recs.push_back(miss);
  miss.success = true;
  miss.wall_ms = 7;
  recs.push_back(miss);

  const auto rows = summarize(recs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 16);
  CHECK(rows[0].trials == 3);
  CHECK(rows[0].successes == 3);
  CHECK(rows[0].success_rate == 1.0);
  CHECK(rows[0].median_ms == 20.0);
  CHECK(rows[1].successes == 1);
  CHECK(rows[1].success_rate == 0.5);
  CHECK(rows[1].median_ms == 6.0);
}

TEST_CASE("scaling slope") {
  std::vector<SummaryRow> rows(2);
  rows[0].n = 10;
  rows[0].median_ms = 1;
  rows[1].n = 100;
  rows[1].median_ms = 100;
  CHECK(*scaling_slope(rows) == doctest::Approx(2.0));
  rows.pop_back();
  CHECK_FALSE(scaling_slope(rows).has_value());
}

TEST_CASE("grid is deterministic apart from timing") {
  TrialGrid grid;
  grid.n_values = {16};
  grid.trials_per_point = 4;
  grid.seed_base = 5;
  grid.threads = 2;
  const auto a = run_grid(grid);
  grid.threads = 1;
  const auto b = run_grid(grid);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == trial_seed(5, 16, i));
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].success == b[i].success);
    CHECK(a[i].candidates == b[i].candidates);
    CHECK(a[i].swaps == b[i].swaps);
    CHECK(a[i].selection_ok == b[i].selection_ok);
    if (a[i].success) CHECK(a[i].validation);
  }

  std::ostringstream csv;
  write_csv(csv, a);
  const std::string text = csv.str();
  CHECK(text.rfind("n,seed,success,wall_ms,candidates,selection_ok,swaps\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
