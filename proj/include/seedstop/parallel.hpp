#pragma once

#include <cstddef>
#include <span>

namespace seedstop {

// Reduction granularity shared by every kernel that averages per-item
// outcomes. Partials are accumulated serially inside each chunk and the
// chunks are combined in index order, so sums are bit-identical for any
// thread count, including a plain serial loop.
inline constexpr std::size_t kReduceChunk = 1024;

inline std::size_t reduce_chunk_count(std::size_t n) {
  return (n + kReduceChunk - 1) / kReduceChunk;
}

double chunked_sum(std::span<const double> values);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population std
};

MeanStd chunked_mean_std(std::span<const double> values);

int max_threads();
void set_threads(int n);

}  // namespace seedstop
