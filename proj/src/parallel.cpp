#include "seedstop/parallel.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seedstop {

double chunked_sum(std::span<const double> values) {
  double total = 0.0;
  for (std::size_t start = 0; start < values.size(); start += kReduceChunk) {
    const std::size_t stop = std::min(values.size(), start + kReduceChunk);
    double part = 0.0;
    for (std::size_t i = start; i < stop; ++i) part += values[i];
    total += part;
  }
  return total;
}

MeanStd chunked_mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::size_t start = 0; start < values.size(); start += kReduceChunk) {
    const std::size_t stop = std::min(values.size(), start + kReduceChunk);
    double part = 0.0;
    double partsq = 0.0;
    for (std::size_t i = start; i < stop; ++i) {
      part += values[i];
      partsq += values[i] * values[i];
    }
    sum += part;
    sumsq += partsq;
  }
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  return {mean, std::sqrt(std::max(0.0, var))};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace seedstop
