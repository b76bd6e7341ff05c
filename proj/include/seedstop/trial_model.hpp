#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seedstop {

enum class MetricKind { accuracy, f1, acc_f1_mean, mcc };

struct MetricRange {
  double lo;
  double hi;
};

MetricRange metric_range(MetricKind kind);
const char* metric_name(MetricKind kind);
std::optional<MetricKind> metric_from_name(std::string_view name);

// All supported metrics improve upwards.
constexpr bool metric_higher_is_better(MetricKind) { return true; }

// One validation evaluation. fraction is the position in training in
// (0, 1]; fraction 1 means fully trained.
struct EvalPoint {
  double fraction = 0.0;
  double value = 0.0;

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

// One training run, identified by its weight-initialization (WI) and
// data-order (DO) seeds, with its evaluation curve.
struct TrialRecord {
  std::string task_id;
  std::int64_t wi_seed = 0;
  std::int64_t do_seed = 0;
  MetricKind metric_kind = MetricKind::accuracy;
  std::vector<EvalPoint> evals;  // strictly increasing fractions, last == 1
  std::map<std::string, std::string> meta;

  double final_value() const { return evals.back().value; }

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Validated set of trials for one task and one metric, sorted by
// (wi_seed, do_seed).
struct TrialPool {
  std::string task_id;
  MetricKind metric_kind = MetricKind::accuracy;
  std::vector<TrialRecord> trials;

  std::vector<double> final_values() const;

  friend bool operator==(const TrialPool&, const TrialPool&) = default;
};

// Checks every trial invariant, rejects duplicate (wi, do) pairs and mixed
// tasks/metrics, and returns the records sorted into a TrialPool.
TrialPool validate_pool(std::vector<TrialRecord> records);

// Value of the last evaluation at fraction <= f. This is a checkpoint
// lookup, never an interpolation: stopping at f means the most recent
// saved evaluation is what a practitioner would observe.
double value_at_fraction(const TrialRecord& trial, double f);

// Final values arranged as a WI x DO matrix.
struct SeedGrid {
  std::vector<std::int64_t> wi_seeds;   // rows
  std::vector<std::int64_t> do_seeds;   // columns
  std::vector<double> final_values;     // row-major

  std::size_t rows() const { return wi_seeds.size(); }
  std::size_t cols() const { return do_seeds.size(); }
  double at(std::size_t i, std::size_t j) const {
    return final_values[i * cols() + j];
  }
  double& at(std::size_t i, std::size_t j) {
    return final_values[i * cols() + j];
  }
};

// Requires the pool to be fully crossed (every WI x DO pair present).
// With sort_by_mean the rows are ordered by decreasing row mean and the
// columns by increasing column mean, which is the conventional heatmap
// layout; otherwise seeds stay in ascending order.
SeedGrid build_seed_grid(const TrialPool& pool, bool sort_by_mean = false);

// Checkpoint fractions present in every trial, ascending. Fractions are
// compared exactly: trials from one sweep share the same cadence grid.
std::vector<double> common_fractions(const TrialPool& pool);

// Union of all fractions minus the common ones, ascending.
std::vector<double> partial_fractions(const TrialPool& pool);

}  // namespace seedstop
