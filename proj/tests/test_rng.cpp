#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "seedstop/parallel.hpp"
#include "seedstop/rng.hpp"

using namespace seedstop;

TEST_CASE("rng streams are reproducible and order-independent") {
  Rng a(derive_stream(42, 7));
  Rng b(derive_stream(42, 7));
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // Stream identity depends only on (master, a, b), not on when or in
  // what order streams are created.
  const std::uint64_t first = Rng(derive_stream(1, 2, 3)).next_u64();
  Rng other(derive_stream(1, 9, 9));
  other.next_u64();
  CHECK(Rng(derive_stream(1, 2, 3)).next_u64() == first);

  CHECK(derive_stream(1, 2, 3) != derive_stream(1, 3, 2));
  CHECK(derive_stream(1, 2) != derive_stream(2, 2));
}

TEST_CASE("uniform_index stays in range and covers all buckets") {
  Rng rng(derive_stream(7, 0));
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t k = rng.uniform_index(10);
    REQUIRE(k < 10);
    ++hits[static_cast<std::size_t>(k)];
  }
  for (int h : hits) CHECK(h > 800);  // fair to ~20%
}

TEST_CASE("uniform_unit lies in (0, 1]") {
  Rng rng(derive_stream(9, 1));
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform_unit();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("normal draws have roughly standard moments") {
  Rng rng(derive_stream(11, 2));
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 1.0) < 0.03);
}

TEST_CASE("chunked reductions match plain math on simple input") {
  std::vector<double> ones(5000, 1.0);
  CHECK(chunked_sum(ones) == 5000.0);
  const MeanStd ms = chunked_mean_std(ones);
  CHECK(ms.mean == 1.0);
  CHECK(ms.std == 0.0);

  std::vector<double> two = {1.0, 3.0};
  const MeanStd ms2 = chunked_mean_std(two);
  CHECK(ms2.mean == 2.0);
  CHECK(ms2.std == 1.0);
}

TEST_CASE("chunked reduction is a pure function of the value sequence") {
  std::vector<double> values;
  Rng rng(derive_stream(3, 3));
  for (int i = 0; i < 4096 + 37; ++i) values.push_back(rng.uniform_unit());
  const MeanStd a = chunked_mean_std(values);
  const MeanStd b = chunked_mean_std(values);
  CHECK(a.mean == b.mean);
  CHECK(a.std == b.std);
}
