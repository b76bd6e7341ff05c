#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seedstop/rng.hpp"
#include "seedstop/seed_analysis.hpp"
#include "seedstop/trial_model.hpp"

namespace seedstop {

// Start t trials, evaluate them at fraction f of training, keep the p
// most promising and train those to completion.
struct EarlyStopPolicy {
  int t = 1;
  double f = 1.0;
  int p = 1;
  double s = 3.0;  // epochs for one full training run
};

// Compute cost of a policy in epochs: (t*f + p*(1-f)) * s.
double budget_of(const EarlyStopPolicy& policy);

struct SimulationReport {
  EarlyStopPolicy policy;
  double expected_perf = 0.0;
  double std_perf = 0.0;
  double budget_epochs = 0.0;
  std::uint64_t reps = 0;  // 0 means exact enumeration
};

// Monte-Carlo estimate of the expected final performance of the best
// surviving trial. Each repetition draws t trials from the pool with
// replacement, ranks them by their value at fraction f (ties keep draw
// order), finishes the top p, and scores the best final value among them.
//
// Repetition r uses the substream derive_stream(master_seed, r), so the
// result is bit-identical for any thread count.
SimulationReport simulate_policy(const TrialPool& pool,
                                 const EarlyStopPolicy& policy,
                                 std::uint64_t reps,
                                 std::int64_t master_seed = kDefaultMasterSeed);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Exact policy value: averages the outcome over all n^t ordered draw
// tuples. Refuses pools where n^t exceeds `cap`.
SimulationReport enumerate_policy(const TrialPool& pool,
                                  const EarlyStopPolicy& policy,
                                  std::uint64_t cap = kDefaultEnumerationCap);

struct OptimizationResult {
  int budget_trials = 0;  // x: budget expressed as full training runs
  EarlyStopPolicy best_policy;
  double expected_perf = 0.0;
  double baseline_perf = 0.0;           // expected max of x full runs
  double relative_error_reduction = 0.0;
};

// Exhaustive search over every feasible (t, f, p) with f drawn from
// f_grid and budget_of(policy) <= x * s (+1e-9 slack). All candidates are
// scored with common random numbers: candidate evaluation r reuses the
// same drawn trial sequence, so comparisons between policies are paired.
// Ties prefer smaller t, then larger f, then smaller p.
OptimizationResult optimize_policy(const TrialPool& pool, int budget_trials,
                                   std::span<const double> f_grid,
                                   std::uint64_t reps,
                                   std::int64_t master_seed = kDefaultMasterSeed,
                                   double s = 3.0);

// ((1 - perf_base) - (1 - perf_es)) / (1 - perf_base): the share of the
// baseline's error removed by early stopping.
double relative_error_reduction(double perf_es, double perf_base);

// Variant that stops whole seed groups: draw `groups_started` seeds on
// `axis` with replacement, rank a seed group by the mean value of its
// trials at fraction f, keep `groups_kept` groups, and score the best
// final value among the surviving trials. Budgets scale by the number of
// trials per group: (t*f + p*(1-f)) * s * group_size.
SimulationReport simulate_seed_stopping(
    const TrialPool& pool, SeedAxis axis, int groups_started, double f,
    int groups_kept, double s, std::uint64_t reps,
    std::int64_t master_seed = kDefaultMasterSeed);

namespace serial {
SimulationReport simulate_policy(const TrialPool& pool,
                                 const EarlyStopPolicy& policy,
                                 std::uint64_t reps,
                                 std::int64_t master_seed = kDefaultMasterSeed);
OptimizationResult optimize_policy(const TrialPool& pool, int budget_trials,
                                   std::span<const double> f_grid,
                                   std::uint64_t reps,
                                   std::int64_t master_seed = kDefaultMasterSeed,
                                   double s = 3.0);
}

}  // namespace seedstop
