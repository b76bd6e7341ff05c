#include "seedstop/seed_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "seedstop/errors.hpp"
#include "seedstop/special_functions.hpp"

namespace seedstop {

namespace {

double sample_std(std::span<const double> values) {
  // All-equal groups must report exactly 0, not summation residue.
  const bool constant =
      std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); });
  if (constant) return 0.0;
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (n - 1.0));
}

std::vector<double> axis_values(const SeedGrid& grid, SeedAxis axis,
                                std::size_t index) {
  std::vector<double> out;
  if (axis == SeedAxis::weight_init) {
    out.reserve(grid.cols());
    for (std::size_t j = 0; j < grid.cols(); ++j)
      out.push_back(grid.at(index, j));
  } else {
    out.reserve(grid.rows());
    for (std::size_t i = 0; i < grid.rows(); ++i)
      out.push_back(grid.at(i, index));
  }
  return out;
}

double gauss_density(std::span<const double> values, double x, double h) {
  const double inv_h = 1.0 / h;
  double total = 0.0;
  for (double v : values) {
    const double u = (x - v) * inv_h;
    total += std::exp(-0.5 * u * u);
  }
  return total * inv_h * 0.3989422804014326779399461 /
         static_cast<double>(values.size());
}

struct KdeGrid {
  double lo = 0.0;
  double step = 0.0;
  double h = 0.0;
};

KdeGrid kde_setup(std::span<const double> values,
                  std::optional<double> bandwidth, int eval_points) {
  if (values.empty()) raise(Errc::empty_values, "no values given");
  for (double v : values) {
    if (!std::isfinite(v)) raise(Errc::invalid_argument, "values must be finite");
  }
  if (eval_points < 2) {
    raise(Errc::invalid_argument, "kde needs at least 2 grid points");
  }
  const double h = bandwidth ? *bandwidth : silverman_bandwidth(values);
  if (!(h > 0.0) || !std::isfinite(h)) {
    std::ostringstream os;
    os << "bandwidth must be positive and finite, got " << h;
    raise(Errc::invalid_argument, os.str());
  }
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double lo = *mn - 3.0 * h;
  const double hi = *mx + 3.0 * h;
  return {lo, (hi - lo) / static_cast<double>(eval_points - 1), h};
}

}  // namespace

const char* seed_axis_name(SeedAxis axis) {
  return axis == SeedAxis::weight_init ? "wi" : "do";
}

AggregatedStdReport aggregated_std(const SeedGrid& grid, SeedAxis axis) {
  const std::size_t n_seeds =
      axis == SeedAxis::weight_init ? grid.rows() : grid.cols();
  const std::size_t group_size =
      axis == SeedAxis::weight_init ? grid.cols() : grid.rows();
  if (group_size < 2) {
    std::ostringstream os;
    os << "need at least 2 seeds across the opposite axis, got "
       << group_size;
    raise(Errc::degenerate_axis, os.str());
  }

  AggregatedStdReport report;
  report.axis = axis;
  report.per_seed.reserve(n_seeds);
  const std::vector<std::int64_t>& seeds =
      axis == SeedAxis::weight_init ? grid.wi_seeds : grid.do_seeds;
  double std_sum = 0.0;
  for (std::size_t k = 0; k < n_seeds; ++k) {
    const double s = sample_std(axis_values(grid, axis, k));
    report.per_seed.push_back({seeds[k], s});
    std_sum += s;
  }
  report.expected_std = std_sum / static_cast<double>(n_seeds);

  // The overall std is summed over sorted cells so it is exactly invariant
  // under transposing the grid.
  std::vector<double> cells = grid.final_values;
  std::sort(cells.begin(), cells.end());
  report.overall_std = sample_std(cells);
  return report;
}

std::vector<SeedMean> rank_seeds(const SeedGrid& grid, SeedAxis axis) {
  const std::size_t n_seeds =
      axis == SeedAxis::weight_init ? grid.rows() : grid.cols();
  const std::vector<std::int64_t>& seeds =
      axis == SeedAxis::weight_init ? grid.wi_seeds : grid.do_seeds;

  std::vector<SeedMean> ranked;
  ranked.reserve(n_seeds);
  for (std::size_t k = 0; k < n_seeds; ++k) {
    const std::vector<double> vals = axis_values(grid, axis, k);
    double mean = 0.0;
    for (double v : vals) mean += v;
    ranked.push_back({seeds[k], mean / static_cast<double>(vals.size())});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const SeedMean& a, const SeedMean& b) {
              if (a.mean != b.mean) return a.mean > b.mean;
              return a.seed < b.seed;
            });
  return ranked;
}

AnovaResult anova_f_test(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) {
    std::ostringstream os;
    os << "ANOVA needs at least 2 groups, got " << groups.size();
    raise(Errc::too_few_groups, os.str());
  }
  std::size_t total = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() < 2) {
      std::ostringstream os;
      os << "ANOVA group " << g << " has " << groups[g].size()
         << " values, needs at least 2";
      raise(Errc::too_few_samples, os.str());
    }
    for (double v : groups[g]) {
      if (!std::isfinite(v))
        raise(Errc::invalid_argument, "values must be finite");
    }
    total += groups[g].size();
  }

  double grand_sum = 0.0;
  std::vector<double> group_mean(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    double s = 0.0;
    for (double v : groups[g]) s += v;
    group_mean[g] = s / static_cast<double>(groups[g].size());
    grand_sum += s;
  }
  const double grand_mean = grand_sum / static_cast<double>(total);

  double ss_between = 0.0;
  double ss_within = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double d = group_mean[g] - grand_mean;
    ss_between += static_cast<double>(groups[g].size()) * d * d;
    for (double v : groups[g]) {
      ss_within += (v - group_mean[g]) * (v - group_mean[g]);
    }
  }

  AnovaResult result;
  result.df_between = static_cast<int>(groups.size()) - 1;
  result.df_within = static_cast<int>(total - groups.size());
  if (ss_within == 0.0) {
    // All groups internally constant: the test degenerates. Identical
    // means give F = 0; any separation is infinitely significant.
    if (ss_between == 0.0) {
      result.f_stat = 0.0;
      result.p_value = 1.0;
    } else {
      result.f_stat = std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
    }
    return result;
  }
  result.f_stat = (ss_between / result.df_between) /
                  (ss_within / result.df_within);
  result.p_value = f_distribution_sf(result.f_stat, result.df_between,
                                     result.df_within);
  return result;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) raise(Errc::empty_values, "no values given");
  if (!(p >= 0.0) || p > 1.0) {
    raise(Errc::invalid_argument, "quantile level must be in [0, 1]");
  }
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - w) + sorted[hi] * w;
}

double silverman_bandwidth(std::span<const double> values) {
  if (values.empty()) raise(Errc::empty_values, "no values given");
  const std::size_t n = values.size();
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  double max_abs = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
    max_abs = std::max(max_abs, std::fabs(v));
  }
  const double sigma =
      n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  if (sigma == 0.0) {
    // Degenerate sample: pick a small width relative to the data scale so
    // the density is still integrable and plottable.
    return 1e-3 * std::max(max_abs, 1.0);
  }
  const double shrink = std::pow(static_cast<double>(n), -0.2);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr =
      quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  if (iqr == 0.0) return sigma * shrink;
  return 0.9 * std::min(sigma, iqr / 1.34) * shrink;
}

std::vector<KdePoint> kde(std::span<const double> values,
                          std::optional<double> bandwidth, int eval_points) {
  const KdeGrid g = kde_setup(values, bandwidth, eval_points);
  std::vector<KdePoint> out(static_cast<std::size_t>(eval_points));
#pragma omp parallel for schedule(static)
  for (int j = 0; j < eval_points; ++j) {
    const double x = g.lo + g.step * static_cast<double>(j);
    out[static_cast<std::size_t>(j)] = {x, gauss_density(values, x, g.h)};
  }
  return out;
}

namespace serial {

std::vector<KdePoint> kde(std::span<const double> values,
                          std::optional<double> bandwidth, int eval_points) {
  const KdeGrid g = kde_setup(values, bandwidth, eval_points);
  std::vector<KdePoint> out;
  out.reserve(static_cast<std::size_t>(eval_points));
  for (int j = 0; j < eval_points; ++j) {
    const double x = g.lo + g.step * static_cast<double>(j);
    out.push_back({x, gauss_density(values, x, g.h)});
  }
  return out;
}

}  // namespace serial

}  // namespace seedstop
