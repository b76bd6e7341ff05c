#include "seedstop/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

void check_pair(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    std::ostringstream os;
    os << "series lengths differ: " << xs.size() << " vs " << ys.size();
    raise(Errc::length_mismatch, os.str());
  }
  if (xs.size() < 2) {
    std::ostringstream os;
    os << "correlation needs at least 2 pairs, got " << xs.size();
    raise(Errc::too_few_samples, os.str());
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      raise(Errc::invalid_argument, "values must be finite");
    }
  }
}

// Matrix of per-trial values at each common checkpoint, plus the shared
// cell computation. Both the parallel and serial matrix builders defer
// here so they agree bit for bit.
struct CheckpointTable {
  std::vector<double> fractions;
  std::vector<double> dropped;
  std::size_t n_trials = 0;
  std::vector<double> columns;  // column-major: [checkpoint][trial]

  std::span<const double> column(std::size_t c) const {
    return {columns.data() + c * n_trials, n_trials};
  }
};

CheckpointTable make_table(const TrialPool& pool, CorrelationMethod method) {
  if (pool.trials.size() < 2) {
    std::ostringstream os;
    os << "need at least 2 trials, got " << pool.trials.size();
    raise(Errc::too_few_samples, os.str());
  }
  CheckpointTable table;
  table.fractions = common_fractions(pool);
  if (table.fractions.empty()) {
    raise(Errc::no_common_checkpoints,
          "trials share no common checkpoint fractions");
  }
  table.dropped = partial_fractions(pool);
  table.n_trials = pool.trials.size();
  table.columns.resize(table.fractions.size() * table.n_trials);
  for (std::size_t c = 0; c < table.fractions.size(); ++c) {
    for (std::size_t k = 0; k < table.n_trials; ++k) {
      table.columns[c * table.n_trials + k] =
          value_at_fraction(pool.trials[k], table.fractions[c]);
    }
  }
  if (method == CorrelationMethod::spearman) {
    // Rank once per checkpoint; Spearman is Pearson on the ranks.
    for (std::size_t c = 0; c < table.fractions.size(); ++c) {
      const std::vector<double> r = average_ranks(table.column(c));
      std::copy(r.begin(), r.end(),
                table.columns.begin() + static_cast<std::ptrdiff_t>(
                                             c * table.n_trials));
    }
  }
  return table;
}

}  // namespace

const char* correlation_method_name(CorrelationMethod method) {
  return method == CorrelationMethod::pearson ? "pearson" : "spearman";
}

std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys) {
  check_pair(xs, ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    // Positions i..j (0-based) share the average 1-based rank.
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> xs,
                               std::span<const double> ys) {
  check_pair(xs, ys);
  return pearson(average_ranks(xs), average_ranks(ys));
}

CorrelationMatrix checkpoint_correlation_matrix(const TrialPool& pool,
                                                CorrelationMethod method) {
  const CheckpointTable table = make_table(pool, method);
  const std::size_t m = table.fractions.size();
  CorrelationMatrix out;
  out.method = method;
  out.fractions = table.fractions;
  out.dropped_fractions = table.dropped;
  out.values.resize(m * m);

  const std::ptrdiff_t cells = static_cast<std::ptrdiff_t>(m * m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    const std::size_t i = static_cast<std::size_t>(cell) / m;
    const std::size_t j = static_cast<std::size_t>(cell) % m;
    if (j < i) continue;  // fill the upper triangle, mirror below
    out.values[i * m + j] = pearson(table.column(i), table.column(j));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) out.values[i * m + j] = out.at(j, i);
  return out;
}

namespace serial {

CorrelationMatrix checkpoint_correlation_matrix(const TrialPool& pool,
                                                CorrelationMethod method) {
  const CheckpointTable table = make_table(pool, method);
  const std::size_t m = table.fractions.size();
  CorrelationMatrix out;
  out.method = method;
  out.fractions = table.fractions;
  out.dropped_fractions = table.dropped;
  out.values.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      out.values[i * m + j] = pearson(table.column(i), table.column(j));
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) out.values[i * m + j] = out.at(j, i);
  return out;
}

}  // namespace serial

}  // namespace seedstop
