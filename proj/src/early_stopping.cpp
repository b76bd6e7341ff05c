#include "seedstop/early_stopping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "seedstop/errors.hpp"
#include "seedstop/expected_performance.hpp"
#include "seedstop/parallel.hpp"

namespace seedstop {

namespace {

struct DrawnTrial {
  double early = 0.0;
  double final = 0.0;
  std::uint32_t order = 0;
};

// Higher early value wins; ties keep draw order.
inline bool more_promising(const DrawnTrial& a, const DrawnTrial& b) {
  if (a.early != b.early) return a.early > b.early;
  return a.order < b.order;
}

// Best final value among the p most promising of the drawn trials.
double selection_outcome(std::vector<DrawnTrial>& drawn, int p) {
  if (p < static_cast<int>(drawn.size())) {
    std::nth_element(drawn.begin(), drawn.begin() + (p - 1), drawn.end(),
                     more_promising);
  }
  double best = drawn[0].final;
  for (int i = 1; i < p; ++i) best = std::max(best, drawn[i].final);
  return best;
}

void check_policy(const EarlyStopPolicy& policy) {
  std::ostringstream os;
  if (policy.t < 1) {
    os << "t must be >= 1, got " << policy.t;
    raise(Errc::invalid_argument, os.str());
  }
  if (policy.p < 1 || policy.p > policy.t) {
    os << "p must satisfy 1 <= p <= t, got p=" << policy.p
       << " with t=" << policy.t;
    raise(Errc::invalid_argument, os.str());
  }
  if (!(policy.f > 0.0) || policy.f > 1.0) {
    os << "f must be in (0, 1], got " << policy.f;
    raise(Errc::invalid_argument, os.str());
  }
  if (!(policy.s > 0.0)) {
    os << "s must be positive, got " << policy.s;
    raise(Errc::invalid_argument, os.str());
  }
}

void check_pool(const TrialPool& pool) {
  if (pool.trials.empty()) raise(Errc::empty_pool, "pool has no trials");
}

void check_reps(std::uint64_t reps) {
  if (reps == 0) raise(Errc::invalid_argument, "reps must be >= 1");
}

struct PolicyInputs {
  std::vector<double> early;
  std::vector<double> final;

  std::uint64_t size() const { return early.size(); }
};

// Checkpoint and final values per trial. Resolving them up front keeps
// all throwing lookups out of the parallel regions.
PolicyInputs policy_inputs(const TrialPool& pool, double f) {
  PolicyInputs in;
  in.early.reserve(pool.trials.size());
  in.final.reserve(pool.trials.size());
  for (const TrialRecord& t : pool.trials) {
    in.early.push_back(value_at_fraction(t, f));
    in.final.push_back(t.final_value());
  }
  return in;
}

double rep_outcome(const PolicyInputs& in, int p, std::uint64_t master_seed,
                   std::uint64_t rep, std::vector<DrawnTrial>& scratch) {
  Rng rng(derive_stream(master_seed, rep));
  const std::uint64_t n = in.size();
  for (std::uint32_t k = 0; k < scratch.size(); ++k) {
    const std::uint64_t idx = rng.uniform_index(n);
    scratch[k] = {in.early[idx], in.final[idx], k};
  }
  return selection_outcome(scratch, p);
}

SimulationReport simulate_impl(const TrialPool& pool,
                               const EarlyStopPolicy& policy,
                               std::uint64_t reps, std::int64_t master_seed,
                               bool parallel) {
  check_pool(pool);
  check_policy(policy);
  check_reps(reps);
  const PolicyInputs in = policy_inputs(pool, policy.f);
  const auto master = static_cast<std::uint64_t>(master_seed);

  std::vector<double> outcomes(reps);
  if (parallel) {
#pragma omp parallel
    {
      std::vector<DrawnTrial> scratch(static_cast<std::size_t>(policy.t));
#pragma omp for schedule(static)
      for (long long r = 0; r < static_cast<long long>(reps); ++r) {
        outcomes[static_cast<std::size_t>(r)] = rep_outcome(
            in, policy.p, master, static_cast<std::uint64_t>(r), scratch);
      }
    }
  } else {
    std::vector<DrawnTrial> scratch(static_cast<std::size_t>(policy.t));
    for (std::uint64_t r = 0; r < reps; ++r) {
      outcomes[r] = rep_outcome(in, policy.p, master, r, scratch);
    }
  }

  const MeanStd ms = chunked_mean_std(outcomes);
  return {policy, ms.mean, ms.std, budget_of(policy), reps};
}

// ---- exhaustive candidate evaluation ----------------------------------

struct Candidate {
  int t = 0;
  int p = 0;
};

// All feasible (t, p) for one stopping fraction, ordered by t then p.
std::vector<Candidate> candidates_for(double f, double s, double budget_cap) {
  std::vector<Candidate> out;
  for (int t = 1;; ++t) {
    if (budget_of({t, f, 1, s}) > budget_cap) break;
    for (int p = 1; p <= t; ++p) {
      if (budget_of({t, f, p, s}) > budget_cap) break;
      out.push_back({t, p});
    }
  }
  return out;
}

// Scores every candidate for one f over the same rep draws the plain
// simulator would use. Incremental evaluation: draws are inserted into a
// promising-first order one at a time, and after the k-th insertion the
// prefix maxima of final values give the outcome of every (t = k, p)
// candidate at once. Per-chunk partial sums are combined in chunk order,
// which reproduces simulate_policy's reduction bit for bit.
void evaluate_f_group(const PolicyInputs& in,
                      const std::vector<Candidate>& cands, std::uint64_t reps,
                      std::uint64_t master, bool parallel,
                      std::vector<double>& mean_out,
                      std::vector<double>& std_out) {
  const std::size_t n_cands = cands.size();
  int t_max = 0;
  for (const Candidate& c : cands) t_max = std::max(t_max, c.t);
  std::vector<std::vector<std::pair<int, std::size_t>>> by_t(
      static_cast<std::size_t>(t_max) + 1);
  for (std::size_t i = 0; i < n_cands; ++i) {
    by_t[static_cast<std::size_t>(cands[i].t)].push_back({cands[i].p, i});
  }

  const std::size_t n_chunks = reduce_chunk_count(reps);
  std::vector<double> acc_sum(n_chunks * n_cands, 0.0);
  std::vector<double> acc_sq(n_chunks * n_cands, 0.0);
  const std::uint64_t n = in.size();

  struct Scratch {
    std::vector<double> key;      // early values, descending
    std::vector<double> fin;      // finals in the same order
    std::vector<double> prefmax;  // running max of fin
  };

  auto run_chunk = [&](std::size_t c, Scratch& scr) {
    const std::uint64_t start = static_cast<std::uint64_t>(c) * kReduceChunk;
    const std::uint64_t stop =
        std::min<std::uint64_t>(reps, start + kReduceChunk);
    double* sums = acc_sum.data() + c * n_cands;
    double* sqs = acc_sq.data() + c * n_cands;
    for (std::uint64_t rep = start; rep < stop; ++rep) {
      Rng rng(derive_stream(master, rep));
      for (int k = 0; k < t_max; ++k) {
        const std::uint64_t idx = rng.uniform_index(n);
        const double e = in.early[idx];
        const double fv = in.final[idx];
        int pos = k;
        // Insert after any equal key: later draws rank behind earlier
        // ones, matching the tie rule of selection_outcome.
        while (pos > 0 && scr.key[pos - 1] < e) {
          scr.key[pos] = scr.key[pos - 1];
          scr.fin[pos] = scr.fin[pos - 1];
          --pos;
        }
        scr.key[pos] = e;
        scr.fin[pos] = fv;
        for (int i = pos; i <= k; ++i) {
          scr.prefmax[i] =
              i == 0 ? scr.fin[0] : std::max(scr.prefmax[i - 1], scr.fin[i]);
        }
        for (const auto& [p, id] : by_t[static_cast<std::size_t>(k) + 1]) {
          const double o = scr.prefmax[p - 1];
          sums[id] += o;
          sqs[id] += o * o;
        }
      }
    }
  };

  if (parallel) {
#pragma omp parallel
    {
      Scratch scr{std::vector<double>(t_max), std::vector<double>(t_max),
                  std::vector<double>(t_max)};
#pragma omp for schedule(static)
      for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
        run_chunk(static_cast<std::size_t>(c), scr);
      }
    }
  } else {
    Scratch scr{std::vector<double>(t_max), std::vector<double>(t_max),
                std::vector<double>(t_max)};
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c, scr);
  }

  mean_out.assign(n_cands, 0.0);
  std_out.assign(n_cands, 0.0);
  const double dn = static_cast<double>(reps);
  for (std::size_t i = 0; i < n_cands; ++i) {
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t c = 0; c < n_chunks; ++c) {
      sum += acc_sum[c * n_cands + i];
      sumsq += acc_sq[c * n_cands + i];
    }
    const double mean = sum / dn;
    const double var = sumsq / dn - mean * mean;
    mean_out[i] = mean;
    std_out[i] = std::sqrt(std::max(0.0, var));
  }
}

OptimizationResult optimize_impl(const TrialPool& pool, int budget_trials,
                                 std::span<const double> f_grid,
                                 std::uint64_t reps, std::int64_t master_seed,
                                 double s, bool parallel) {
  check_pool(pool);
  check_reps(reps);
  if (budget_trials < 1) {
    std::ostringstream os;
    os << "budget must be >= 1 full trials, got " << budget_trials;
    raise(Errc::invalid_argument, os.str());
  }
  if (!(s > 0.0)) raise(Errc::invalid_argument, "s must be positive");
  if (f_grid.empty()) {
    raise(Errc::budget_infeasible, "no stopping fractions to search over");
  }
  for (double f : f_grid) {
    if (!(f > 0.0) || f > 1.0) {
      std::ostringstream os;
      os << "stopping fraction " << f << " is outside (0, 1]";
      raise(Errc::invalid_argument, os.str());
    }
  }

  const double budget_cap = budget_trials * s + 1e-9;
  const auto master = static_cast<std::uint64_t>(master_seed);

  bool have_best = false;
  EarlyStopPolicy best_policy;
  double best_mean = 0.0;
  auto better = [&](double mean, const EarlyStopPolicy& cand) {
    if (!have_best) return true;
    if (mean != best_mean) return mean > best_mean;
    if (cand.t != best_policy.t) return cand.t < best_policy.t;
    if (cand.f != best_policy.f) return cand.f > best_policy.f;
    return cand.p < best_policy.p;
  };

  std::vector<double> means, stds;
  for (double f : f_grid) {
    const PolicyInputs in = policy_inputs(pool, f);
    const std::vector<Candidate> cands = candidates_for(f, s, budget_cap);
    evaluate_f_group(in, cands, reps, master, parallel, means, stds);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const EarlyStopPolicy policy{cands[i].t, f, cands[i].p, s};
      if (better(means[i], policy)) {
        have_best = true;
        best_policy = policy;
        best_mean = means[i];
      }
    }
  }

  const ExpectedMaxCurve base =
      serial::expected_max_curve(pool.final_values(), budget_trials);
  const double baseline = base.at_x(budget_trials).mean;

  OptimizationResult result;
  result.budget_trials = budget_trials;
  result.best_policy = best_policy;
  result.expected_perf = best_mean;
  result.baseline_perf = baseline;
  result.relative_error_reduction =
      relative_error_reduction(best_mean, baseline);
  return result;
}

}  // namespace

double budget_of(const EarlyStopPolicy& policy) {
  check_policy(policy);
  return (policy.t * policy.f + policy.p * (1.0 - policy.f)) * policy.s;
}

SimulationReport simulate_policy(const TrialPool& pool,
                                 const EarlyStopPolicy& policy,
                                 std::uint64_t reps,
                                 std::int64_t master_seed) {
  return simulate_impl(pool, policy, reps, master_seed, true);
}

SimulationReport enumerate_policy(const TrialPool& pool,
                                  const EarlyStopPolicy& policy,
                                  std::uint64_t cap) {
  check_pool(pool);
  check_policy(policy);
  const std::uint64_t n = pool.trials.size();

  std::uint64_t tuples = 1;
  for (int i = 0; i < policy.t; ++i) {
    if (tuples > cap / n) {
      std::ostringstream os;
      os << "enumerating " << n << "^" << policy.t << " draw tuples exceeds "
         << "the cap of " << cap;
      raise(Errc::enumeration_too_large, os.str());
    }
    tuples *= n;
  }

  const PolicyInputs in = policy_inputs(pool, policy.f);
  std::vector<std::uint64_t> place(static_cast<std::size_t>(policy.t));
  place[static_cast<std::size_t>(policy.t) - 1] = 1;
  for (int j = policy.t - 2; j >= 0; --j) {
    place[static_cast<std::size_t>(j)] =
        place[static_cast<std::size_t>(j) + 1] * n;
  }

  const std::size_t n_chunks = reduce_chunk_count(tuples);
  std::vector<double> chunk_sum(n_chunks, 0.0);
  std::vector<double> chunk_sq(n_chunks, 0.0);

#pragma omp parallel
  {
    std::vector<DrawnTrial> scratch(static_cast<std::size_t>(policy.t));
#pragma omp for schedule(static)
    for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
      const std::uint64_t start =
          static_cast<std::uint64_t>(c) * kReduceChunk;
      const std::uint64_t stop =
          std::min<std::uint64_t>(tuples, start + kReduceChunk);
      double sum = 0.0;
      double sq = 0.0;
      for (std::uint64_t k = start; k < stop; ++k) {
        for (std::uint32_t j = 0; j < scratch.size(); ++j) {
          const std::uint64_t idx = (k / place[j]) % n;
          scratch[j] = {in.early[idx], in.final[idx], j};
        }
        const double o = selection_outcome(scratch, policy.p);
        sum += o;
        sq += o * o;
      }
      chunk_sum[static_cast<std::size_t>(c)] = sum;
      chunk_sq[static_cast<std::size_t>(c)] = sq;
    }
  }

  double sum = 0.0;
  double sumsq = 0.0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    sum += chunk_sum[c];
    sumsq += chunk_sq[c];
  }
  const double dn = static_cast<double>(tuples);
  const double mean = sum / dn;
  const double var = sumsq / dn - mean * mean;
  return {policy, mean, std::sqrt(std::max(0.0, var)), budget_of(policy), 0};
}

OptimizationResult optimize_policy(const TrialPool& pool, int budget_trials,
                                   std::span<const double> f_grid,
                                   std::uint64_t reps,
                                   std::int64_t master_seed, double s) {
  return optimize_impl(pool, budget_trials, f_grid, reps, master_seed, s,
                       true);
}

double relative_error_reduction(double perf_es, double perf_base) {
  if (perf_base >= 1.0) {
    std::ostringstream os;
    os << "baseline performance " << perf_base
       << " leaves no error to reduce";
    raise(Errc::perfect_baseline, os.str());
  }
  return ((1.0 - perf_base) - (1.0 - perf_es)) / (1.0 - perf_base);
}

SimulationReport simulate_seed_stopping(const TrialPool& pool, SeedAxis axis,
                                        int groups_started, double f,
                                        int groups_kept, double s,
                                        std::uint64_t reps,
                                        std::int64_t master_seed) {
  check_pool(pool);
  check_reps(reps);
  const SeedGrid grid = build_seed_grid(pool);
  const std::size_t n_groups =
      axis == SeedAxis::weight_init ? grid.rows() : grid.cols();
  const std::size_t group_size =
      axis == SeedAxis::weight_init ? grid.cols() : grid.rows();
  const EarlyStopPolicy policy{groups_started, f, groups_kept, s};
  check_policy(policy);
  if (static_cast<std::size_t>(groups_started) > n_groups) {
    raise(Errc::invalid_argument,
          "cannot start " + std::to_string(groups_started) +
              " groups: only " + std::to_string(n_groups) +
              " seeds on the axis");
  }

  // value_at_fraction over the trials of one seed group; the pool is
  // sorted by (wi, do), so group (axis, k) is a row or column slice.
  std::vector<double> mean_early(n_groups, 0.0);
  std::vector<double> max_final(n_groups, 0.0);
  for (std::size_t k = 0; k < n_groups; ++k) {
    double sum = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < group_size; ++j) {
      const std::size_t trial_idx = axis == SeedAxis::weight_init
                                        ? k * grid.cols() + j
                                        : j * grid.cols() + k;
      const TrialRecord& t = pool.trials[trial_idx];
      sum += value_at_fraction(t, f);
      best = std::max(best, t.final_value());
    }
    mean_early[k] = sum / static_cast<double>(group_size);
    max_final[k] = best;
  }

  PolicyInputs in;
  in.early = std::move(mean_early);
  in.final = std::move(max_final);
  const auto master = static_cast<std::uint64_t>(master_seed);

  std::vector<double> outcomes(reps);
#pragma omp parallel
  {
    std::vector<DrawnTrial> scratch(static_cast<std::size_t>(groups_started));
#pragma omp for schedule(static)
    for (long long r = 0; r < static_cast<long long>(reps); ++r) {
      outcomes[static_cast<std::size_t>(r)] = rep_outcome(
          in, groups_kept, master, static_cast<std::uint64_t>(r), scratch);
    }
  }
  const MeanStd ms = chunked_mean_std(outcomes);
  return {policy, ms.mean, ms.std,
          budget_of(policy) * static_cast<double>(group_size), reps};
}

namespace serial {

SimulationReport simulate_policy(const TrialPool& pool,
                                 const EarlyStopPolicy& policy,
                                 std::uint64_t reps,
                                 std::int64_t master_seed) {
  return simulate_impl(pool, policy, reps, master_seed, false);
}

OptimizationResult optimize_policy(const TrialPool& pool, int budget_trials,
                                   std::span<const double> f_grid,
                                   std::uint64_t reps,
                                   std::int64_t master_seed, double s) {
  return optimize_impl(pool, budget_trials, f_grid, reps, master_seed, s,
                       false);
}

}  // namespace serial

}  // namespace seedstop
