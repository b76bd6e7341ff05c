#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seedstop/trial_model.hpp"

namespace seedstop {

enum class SeedAxis { weight_init, data_order };

const char* seed_axis_name(SeedAxis axis);

struct PerSeedStd {
  std::int64_t seed = 0;
  double std = 0.0;  // sample std across the opposite axis
};

struct AggregatedStdReport {
  SeedAxis axis = SeedAxis::weight_init;
  std::vector<PerSeedStd> per_seed;
  double expected_std = 0.0;  // mean of the per-seed stds
  double overall_std = 0.0;   // sample std over every grid cell
};

// Variance left after fixing each seed on `axis`. axis = weight_init
// aggregates over WI: one std per WI seed, taken across the DO seeds.
AggregatedStdReport aggregated_std(const SeedGrid& grid, SeedAxis axis);

struct SeedMean {
  std::int64_t seed = 0;
  double mean = 0.0;
};

// Seeds ordered by decreasing mean final value across the opposite axis;
// ties break toward the smaller seed.
std::vector<SeedMean> rank_seeds(const SeedGrid& grid, SeedAxis axis);

struct AnovaResult {
  double f_stat = 0.0;  // +inf when within-group variance is 0
  int df_between = 0;
  int df_within = 0;
  double p_value = 1.0;
};

// One-way fixed-effects ANOVA. Requires >= 2 groups of >= 2 values each.
AnovaResult anova_f_test(const std::vector<std::vector<double>>& groups);

struct KdePoint {
  double x = 0.0;
  double density = 0.0;
};

// Gaussian kernel density estimate on a uniform grid spanning
// [min - 3h, max + 3h]. With no explicit bandwidth, Silverman's rule
//   h = 0.9 * min(sigma, IQR/1.34) * n^(-1/5)
// is used, falling back to sigma * n^(-1/5) when the IQR is 0 and to a
// small scale-relative width when sigma is 0.
std::vector<KdePoint> kde(std::span<const double> values,
                          std::optional<double> bandwidth = std::nullopt,
                          int eval_points = 512);

double silverman_bandwidth(std::span<const double> values);

// Linearly interpolated quantile of sorted data (the common "type 7"
// definition), p in [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

namespace serial {
std::vector<KdePoint> kde(std::span<const double> values,
                          std::optional<double> bandwidth = std::nullopt,
                          int eval_points = 512);
}

}  // namespace seedstop
