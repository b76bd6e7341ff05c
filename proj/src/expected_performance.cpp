#include "seedstop/expected_performance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

struct Empirical {
  std::vector<double> value;  // distinct values, ascending
  std::vector<double> cdf;    // P(draw <= value[i]), cdf.back() == 1
};

Empirical make_empirical(std::span<const double> values) {
  if (values.empty()) raise(Errc::empty_values, "no values given");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) {
      raise(Errc::invalid_argument, "values must be finite");
    }
  }
  std::sort(sorted.begin(), sorted.end());

  Empirical e;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 == sorted.size() || sorted[i + 1] != sorted[i]) {
      e.value.push_back(sorted[i]);
      e.cdf.push_back(static_cast<double>(i + 1) / n);
    }
  }
  return e;
}

// One curve point. pow is monotone in x for fixed base in (0, 1), and
// floating-point add/subtract of termwise-monotone series stays monotone,
// so mean(x) never decreases with x even under rounding.
ExpectedMaxPoint curve_point(const Empirical& e, int x, double lo, double hi) {
  const std::size_t m = e.value.size();
  double mean = e.value.back();
  double second_moment = 0.0;
  double prev_pow = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double p = std::pow(e.cdf[i], static_cast<double>(x));
    second_moment += e.value[i] * e.value[i] * (p - prev_pow);
    if (i + 1 < m) mean -= (e.value[i + 1] - e.value[i]) * p;
    prev_pow = p;
  }
  const double var = second_moment - mean * mean;
  return {x, mean, std::sqrt(std::max(0.0, var)), lo, hi};
}

Empirical checked_empirical(std::span<const double> values, int x_max) {
  if (x_max < 1) {
    std::ostringstream os;
    os << "x_max must be >= 1, got " << x_max;
    raise(Errc::invalid_argument, os.str());
  }
  return make_empirical(values);
}

}  // namespace

ExpectedMaxCurve expected_max_curve(std::span<const double> values,
                                    int x_max) {
  const Empirical e = checked_empirical(values, x_max);
  const double lo = e.value.front(), hi = e.value.back();
  ExpectedMaxCurve curve;
  curve.points.resize(static_cast<std::size_t>(x_max));
#pragma omp parallel for schedule(static)
  for (int x = 1; x <= x_max; ++x) {
    curve.points[static_cast<std::size_t>(x) - 1] = curve_point(e, x, lo, hi);
  }
  return curve;
}

namespace serial {

ExpectedMaxCurve expected_max_curve(std::span<const double> values,
                                    int x_max) {
  const Empirical e = checked_empirical(values, x_max);
  const double lo = e.value.front(), hi = e.value.back();
  ExpectedMaxCurve curve;
  curve.points.reserve(static_cast<std::size_t>(x_max));
  for (int x = 1; x <= x_max; ++x) {
    curve.points.push_back(curve_point(e, x, lo, hi));
  }
  return curve;
}

}  // namespace serial

}  // namespace seedstop
