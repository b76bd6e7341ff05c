#include "seedstop/trial_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

std::string trial_label(const TrialRecord& t) {
  std::ostringstream os;
  os << "trial (wi=" << t.wi_seed << ", do=" << t.do_seed << ")";
  return os.str();
}

void validate_record(const TrialRecord& t, const MetricRange& range) {
  if (t.evals.empty() || t.evals.back().fraction != 1.0) {
    raise(Errc::missing_final_eval,
          trial_label(t) + " has no evaluation at fraction 1");
  }
  double prev = 0.0;
  for (const EvalPoint& e : t.evals) {
    if (!(e.fraction > prev)) {
      std::ostringstream os;
      os << trial_label(t) << " has non-increasing or non-positive eval "
         << "fraction " << e.fraction;
      raise(Errc::non_monotone_fractions, os.str());
    }
    if (e.fraction > 1.0) {
      std::ostringstream os;
      os << trial_label(t) << " has eval fraction " << e.fraction << " > 1";
      raise(Errc::out_of_range_value, os.str());
    }
    if (!std::isfinite(e.value) || e.value < range.lo || e.value > range.hi) {
      std::ostringstream os;
      os << trial_label(t) << " has value " << e.value << " outside ["
         << range.lo << ", " << range.hi << "] at fraction " << e.fraction;
      raise(Errc::out_of_range_value, os.str());
    }
    prev = e.fraction;
  }
}

}  // namespace

MetricRange metric_range(MetricKind kind) {
  return kind == MetricKind::mcc ? MetricRange{-1.0, 1.0}
                                 : MetricRange{0.0, 1.0};
}

const char* metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::accuracy:    return "accuracy";
    case MetricKind::f1:          return "f1";
    case MetricKind::acc_f1_mean: return "acc_f1_mean";
    case MetricKind::mcc:         return "mcc";
  }
  return "?";
}

std::optional<MetricKind> metric_from_name(std::string_view name) {
  if (name == "accuracy" || name == "acc") return MetricKind::accuracy;
  if (name == "f1") return MetricKind::f1;
  if (name == "acc_f1_mean") return MetricKind::acc_f1_mean;
  if (name == "mcc") return MetricKind::mcc;
  return std::nullopt;
}

std::vector<double> TrialPool::final_values() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const TrialRecord& t : trials) out.push_back(t.final_value());
  return out;
}

TrialPool validate_pool(std::vector<TrialRecord> records) {
  if (records.empty()) raise(Errc::empty_pool, "pool has no trials");

  const std::string& task = records.front().task_id;
  const MetricKind kind = records.front().metric_kind;
  const MetricRange range = metric_range(kind);
  for (const TrialRecord& t : records) {
    if (t.task_id != task) {
      raise(Errc::mixed_task_ids, "pool mixes tasks '" + task + "' and '" +
                                      t.task_id + "'");
    }
    if (t.metric_kind != kind) {
      raise(Errc::mixed_metric_kinds,
            std::string("pool mixes metrics '") + metric_name(kind) +
                "' and '" + metric_name(t.metric_kind) + "'");
    }
    validate_record(t, range);
  }

  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::pair(a.wi_seed, a.do_seed) <
                     std::pair(b.wi_seed, b.do_seed);
            });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].wi_seed == records[i - 1].wi_seed &&
        records[i].do_seed == records[i - 1].do_seed) {
      raise(Errc::duplicate_seed_pair,
            "duplicate " + trial_label(records[i]));
    }
  }

  TrialPool pool;
  pool.task_id = task;
  pool.metric_kind = kind;
  pool.trials = std::move(records);
  return pool;
}

double value_at_fraction(const TrialRecord& trial, double f) {
  if (!(f > 0.0) || f > 1.0) {
    std::ostringstream os;
    os << "fraction " << f << " is outside (0, 1]";
    raise(Errc::invalid_argument, os.str());
  }
  auto it = std::upper_bound(
      trial.evals.begin(), trial.evals.end(), f,
      [](double lhs, const EvalPoint& e) { return lhs < e.fraction; });
  if (it == trial.evals.begin()) {
    std::ostringstream os;
    os << trial_label(trial) << " has no evaluation at or before fraction "
       << f;
    raise(Errc::no_checkpoint, os.str());
  }
  return std::prev(it)->value;
}

SeedGrid build_seed_grid(const TrialPool& pool, bool sort_by_mean) {
  SeedGrid grid;
  std::set<std::int64_t> wi_set, do_set;
  for (const TrialRecord& t : pool.trials) {
    wi_set.insert(t.wi_seed);
    do_set.insert(t.do_seed);
  }
  grid.wi_seeds.assign(wi_set.begin(), wi_set.end());
  grid.do_seeds.assign(do_set.begin(), do_set.end());

  if (pool.trials.size() != grid.rows() * grid.cols()) {
    std::ostringstream os;
    os << "pool is not fully crossed: " << pool.trials.size()
       << " trials for " << grid.rows() << " WI x " << grid.cols()
       << " DO seeds";
    raise(Errc::incomplete_grid, os.str());
  }

  // validate_pool sorted the trials by (wi, do) and rejected duplicates,
  // so a size match means the pool is exactly the cross product.
  grid.final_values.resize(pool.trials.size());
  for (std::size_t k = 0; k < pool.trials.size(); ++k) {
    grid.final_values[k] = pool.trials[k].final_value();
  }

  if (!sort_by_mean) return grid;

  const std::size_t rows = grid.rows(), cols = grid.cols();
  std::vector<std::size_t> row_order(rows), col_order(cols);
  std::vector<double> row_mean(rows, 0.0), col_mean(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      row_mean[i] += grid.at(i, j) / static_cast<double>(cols);
      col_mean[j] += grid.at(i, j) / static_cast<double>(rows);
    }
  for (std::size_t i = 0; i < rows; ++i) row_order[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;
  // Best row first, best column last.
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return row_mean[a] > row_mean[b];
                   });
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return col_mean[a] < col_mean[b];
                   });

  SeedGrid sorted;
  sorted.wi_seeds.resize(rows);
  sorted.do_seeds.resize(cols);
  sorted.final_values.resize(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    sorted.wi_seeds[i] = grid.wi_seeds[row_order[i]];
  for (std::size_t j = 0; j < cols; ++j)
    sorted.do_seeds[j] = grid.do_seeds[col_order[j]];
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      sorted.at(i, j) = grid.at(row_order[i], col_order[j]);
  return sorted;
}

std::vector<double> common_fractions(const TrialPool& pool) {
  if (pool.trials.empty()) raise(Errc::empty_pool, "pool has no trials");
  std::set<double> common;
  for (const EvalPoint& e : pool.trials.front().evals)
    common.insert(e.fraction);
  for (std::size_t k = 1; k < pool.trials.size() && !common.empty(); ++k) {
    std::set<double> here;
    for (const EvalPoint& e : pool.trials[k].evals) here.insert(e.fraction);
    std::set<double> kept;
    for (double f : common)
      if (here.count(f)) kept.insert(f);
    common.swap(kept);
  }
  return {common.begin(), common.end()};
}

std::vector<double> partial_fractions(const TrialPool& pool) {
  const std::vector<double> common = common_fractions(pool);
  std::set<double> all;
  for (const TrialRecord& t : pool.trials)
    for (const EvalPoint& e : t.evals) all.insert(e.fraction);
  std::vector<double> dropped;
  std::set_difference(all.begin(), all.end(), common.begin(), common.end(),
                      std::back_inserter(dropped));
  return dropped;
}

}  // namespace seedstop
