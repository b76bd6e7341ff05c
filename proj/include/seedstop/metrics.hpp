#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include "seedstop/trial_model.hpp"

namespace seedstop {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + tn + fp + fn; }
};

// Binary labels/predictions in {0, 1}, positive class 1.
ConfusionCounts confusion_counts(std::span<const int> labels,
                                 std::span<const int> predictions);

// accuracy: (tp+tn)/total
// f1: 2tp/(2tp+fp+fn), 0 when the denominator is 0
// acc_f1_mean: (accuracy+f1)/2
// mcc: (tp*tn-fp*fn)/sqrt((tp+fp)(tp+fn)(tn+fp)(tn+fn)), 0 when any
//      factor is 0
double metric_value(MetricKind kind, const ConfusionCounts& counts);

// Two-column CSV "label,prediction"; a non-numeric first line is treated
// as a header and skipped.
double metric_from_csv(std::istream& in, MetricKind kind);

}  // namespace seedstop
