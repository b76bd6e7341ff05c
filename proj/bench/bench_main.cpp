// Timing comparison between the OpenMP kernels and their serial reference
// implementations, on a synthetic pool. The two variants must also agree
// bit for bit; any mismatch is reported and fails the run.

#include <chrono>
#include <cstdio>
#include <string>

#include "seedstop/correlation.hpp"
#include "seedstop/early_stopping.hpp"
#include "seedstop/expected_performance.hpp"
#include "seedstop/parallel.hpp"
#include "seedstop/seed_analysis.hpp"
#include "seedstop/synthgen.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const char* name, double serial_s, double parallel_s,
            bool identical) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name, serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              identical ? "bit-identical" : "MISMATCH");
  if (!identical) ++failures;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", seedstop::max_threads());

  seedstop::SynthConfig config;
  config.n_wi = 25;
  config.n_do = 25;
  config.diverge_prob = 0.2;
  config.checkpoints = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const seedstop::TrialPool pool = seedstop::generate_pool(config);
  const std::vector<double> finals = pool.final_values();

  {
    auto t0 = Clock::now();
    const auto serial = seedstop::serial::expected_max_curve(finals, 20000);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = seedstop::expected_max_curve(finals, 20000);
    const double tp = seconds_since(t0);
    bool same = serial.points.size() == parallel.points.size();
    for (std::size_t i = 0; same && i < serial.points.size(); ++i) {
      same = serial.points[i].mean == parallel.points[i].mean &&
             serial.points[i].std == parallel.points[i].std;
    }
    report("expected_max_curve", ts, tp, same);
  }

  {
    const seedstop::EarlyStopPolicy policy{60, 0.3, 10, 3.0};
    constexpr std::uint64_t reps = 400000;
    auto t0 = Clock::now();
    const auto serial = seedstop::serial::simulate_policy(pool, policy, reps);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = seedstop::simulate_policy(pool, policy, reps);
    const double tp = seconds_since(t0);
    report("simulate_policy", ts, tp,
           serial.expected_perf == parallel.expected_perf &&
               serial.std_perf == parallel.std_perf);
  }

  {
    const std::vector<double> f_grid = {0.1, 0.3, 0.6};
    constexpr std::uint64_t reps = 20000;
    auto t0 = Clock::now();
    const auto serial =
        seedstop::serial::optimize_policy(pool, 15, f_grid, reps);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = seedstop::optimize_policy(pool, 15, f_grid, reps);
    const double tp = seconds_since(t0);
    report("optimize_policy", ts, tp,
           serial.expected_perf == parallel.expected_perf &&
               serial.best_policy.t == parallel.best_policy.t &&
               serial.best_policy.f == parallel.best_policy.f &&
               serial.best_policy.p == parallel.best_policy.p);
  }

  {
    auto t0 = Clock::now();
    const auto serial = seedstop::serial::checkpoint_correlation_matrix(
        pool, seedstop::CorrelationMethod::spearman);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = seedstop::checkpoint_correlation_matrix(
        pool, seedstop::CorrelationMethod::spearman);
    const double tp = seconds_since(t0);
    report("correlation_matrix", ts, tp, serial.values == parallel.values);
  }

  {
    auto t0 = Clock::now();
    const auto serial = seedstop::serial::kde(finals, std::nullopt, 200000);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = seedstop::kde(finals, std::nullopt, 200000);
    const double tp = seconds_since(t0);
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].x == parallel[i].x &&
             serial[i].density == parallel[i].density;
    }
    report("kde", ts, tp, same);
  }

  return failures == 0 ? 0 : 1;
}
