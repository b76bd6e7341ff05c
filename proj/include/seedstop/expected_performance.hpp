#pragma once

#include <span>
#include <vector>

namespace seedstop {

struct ExpectedMaxPoint {
  int x = 0;          // number of trials
  double mean = 0.0;  // E[max of x i.i.d. draws from the empirical dist]
  double std = 0.0;   // exact std of that maximum
  double min = 0.0;   // pool minimum, constant in x
  double max = 0.0;   // pool maximum, constant in x
};

struct ExpectedMaxCurve {
  std::vector<ExpectedMaxPoint> points;  // x = 1..x_max

  const ExpectedMaxPoint& at_x(int x) const { return points.at(x - 1); }
};

// Expected best validation performance as a function of the number of
// trials x, under i.i.d. draws with replacement from `values`.
//
// With the distinct sorted values v_1 < ... < v_m and empirical CDF F_i,
// the mean is evaluated in the telescoped form
//   E[max] = v_m - sum_{i<m} (v_{i+1} - v_i) * F_i^x
// which is nondecreasing in x even in floating point, because every
// subtracted term shrinks monotonically with x. The second moment is
// accumulated directly and the variance clamped at 0.
ExpectedMaxCurve expected_max_curve(std::span<const double> values, int x_max);

namespace serial {
ExpectedMaxCurve expected_max_curve(std::span<const double> values, int x_max);
}

}  // namespace seedstop
