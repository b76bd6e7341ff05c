#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seedstop/trial_model.hpp"

namespace seedstop {

enum class CorrelationMethod { pearson, spearman };

const char* correlation_method_name(CorrelationMethod method);

// nullopt when either side has zero variance: the coefficient is
// undefined there, and reporting 0 instead would fake "no correlation".
std::optional<double> pearson(std::span<const double> xs,
                              std::span<const double> ys);
std::optional<double> spearman(std::span<const double> xs,
                               std::span<const double> ys);

// 1-based ranks; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> xs);

struct CorrelationMatrix {
  CorrelationMethod method = CorrelationMethod::spearman;
  std::vector<double> fractions;               // common checkpoints, ascending
  std::vector<std::optional<double>> values;   // row-major, symmetric
  std::vector<double> dropped_fractions;       // not present in every trial

  std::size_t size() const { return fractions.size(); }
  std::optional<double> at(std::size_t i, std::size_t j) const {
    return values[i * size() + j];
  }
};

// Correlation between trial values at every pair of common checkpoints,
// across the trials of the pool. Checkpoints missing from some trials are
// excluded and reported in dropped_fractions.
CorrelationMatrix checkpoint_correlation_matrix(const TrialPool& pool,
                                                CorrelationMethod method);

namespace serial {
CorrelationMatrix checkpoint_correlation_matrix(const TrialPool& pool,
                                                CorrelationMethod method);
}

}  // namespace seedstop
