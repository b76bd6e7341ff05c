#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "seedstop/metrics.hpp"
#include "test_support.hpp"

using namespace seedstop;

TEST_CASE("confusion_counts tallies the four cells") {
  const std::vector<int> y = {1, 1, 0, 0, 1, 0};
  const std::vector<int> yhat = {1, 0, 0, 1, 1, 0};
  const ConfusionCounts c = confusion_counts(y, yhat);
  CHECK(c.tp == 2);
  CHECK(c.fn == 1);
  CHECK(c.tn == 2);
  CHECK(c.fp == 1);
}

TEST_CASE("confusion_counts rejects bad input") {
  const std::vector<int> a = {0, 1};
  const std::vector<int> b = {0};
  CHECK_ERRC(confusion_counts(a, b), length_mismatch);
  CHECK_ERRC(confusion_counts({}, {}), empty_input);
  const std::vector<int> bad = {0, 2};
  CHECK_ERRC(confusion_counts(bad, a), invalid_argument);
}

TEST_CASE("metric values on a hand-checked confusion matrix") {
  // tp=2, tn=1, fp=0, fn=1
  const ConfusionCounts c{2, 1, 0, 1};
  CHECK(metric_value(MetricKind::accuracy, c) == 0.75);
  CHECK(metric_value(MetricKind::f1, c) == doctest::Approx(0.8));
  CHECK(metric_value(MetricKind::acc_f1_mean, c) == doctest::Approx(0.775));
  // (2*1 - 0*1) / sqrt(2*3*1*2) = 2 / sqrt(12)
  CHECK(metric_value(MetricKind::mcc, c) ==
        doctest::Approx(2.0 / std::sqrt(12.0)).epsilon(1e-12));
}

TEST_CASE("degenerate denominators give 0, not NaN") {
  // No positives anywhere: f1 and mcc collapse.
  const ConfusionCounts none{0, 4, 0, 0};
  CHECK(metric_value(MetricKind::f1, none) == 0.0);
  CHECK(metric_value(MetricKind::mcc, none) == 0.0);
  CHECK(metric_value(MetricKind::accuracy, none) == 1.0);

  // Everything predicted positive while nothing is: the tp+fn marginal is
  // 0, so the mcc denominator vanishes.
  const ConfusionCounts all_false_pos{0, 0, 4, 0};
  CHECK(metric_value(MetricKind::f1, all_false_pos) == 0.0);
  CHECK(metric_value(MetricKind::mcc, all_false_pos) == 0.0);
  CHECK(metric_value(MetricKind::accuracy, all_false_pos) == 0.0);

  // All marginals positive but every prediction wrong: that is perfect
  // anticorrelation, not a degenerate denominator.
  const ConfusionCounts all_wrong{0, 0, 2, 2};
  CHECK(metric_value(MetricKind::mcc, all_wrong) == -1.0);
}

TEST_CASE("metric bounds hold on random confusion matrices") {
  seedstop::Rng rng(seedstop::derive_stream(100, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const ConfusionCounts c{rng.uniform_index(20), rng.uniform_index(20),
                            rng.uniform_index(20), rng.uniform_index(20)};
    if (c.total() == 0) continue;
    for (MetricKind kind : {MetricKind::accuracy, MetricKind::f1,
                            MetricKind::acc_f1_mean, MetricKind::mcc}) {
      const double v = metric_value(kind, c);
      const MetricRange r = metric_range(kind);
      CHECK(v >= r.lo);
      CHECK(v <= r.hi);
    }
  }
}

TEST_CASE("metric_from_csv parses rows and skips a header") {
  std::istringstream csv("label,prediction\n1,1\n1,0\n0,0\n0,0\n");
  CHECK(metric_from_csv(csv, MetricKind::accuracy) == 0.75);

  std::istringstream no_header("1,1\n0,1\n");
  CHECK(metric_from_csv(no_header, MetricKind::accuracy) == 0.5);

  std::istringstream garbage("1,1\nfoo,bar\n");
  CHECK_ERRC(metric_from_csv(garbage, MetricKind::accuracy), parse_error);

  std::istringstream empty("");
  CHECK_ERRC(metric_from_csv(empty, MetricKind::accuracy), empty_input);
}
