#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "seedstop/rng.hpp"
#include "seedstop/special_functions.hpp"

#include "test_support.hpp"

using namespace seedstop;

namespace {

// Student-t density, used as an integration oracle that shares no code
// with the continued-fraction implementation under test.
double t_pdf(double x, double nu) {
  const double c = std::exp(std::lgamma((nu + 1.0) / 2.0) -
                            std::lgamma(nu / 2.0)) /
                   std::sqrt(nu * 3.14159265358979323846);
  return c * std::pow(1.0 + x * x / nu, -(nu + 1.0) / 2.0);
}

double simpson(double (*f)(double, double), double nu, double lo, double hi,
               int n) {
  // n must be even.
  const double h = (hi - lo) / n;
  double acc = f(lo, nu) + f(hi, nu);
  for (int i = 1; i < n; ++i) {
    acc += f(lo + i * h, nu) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

// P(F(1, nu) > f) = P(|t_nu| > sqrt(f)), by the square relation between
// the two distributions.
double f_tail_via_t(double f, double nu) {
  const double c = std::sqrt(f);
  // The t_nu tail decays polynomially; integrate far enough that the
  // remainder is below the comparison tolerance.
  return 2.0 * simpson(&t_pdf, nu, c, c + 400.0, 400000);
}

}  // namespace

TEST_CASE("incomplete beta closed forms") {
  for (double x : {0.0, 0.05, 0.3, 0.5, 0.77, 0.99, 1.0}) {
    CHECK(regularized_incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    for (double b : {0.5, 2.0, 7.25}) {
      CHECK(regularized_incomplete_beta(1.0, b, x) ==
            doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-10));
      CHECK(regularized_incomplete_beta(b, 1.0, x) ==
            doctest::Approx(std::pow(x, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("incomplete beta reflection symmetry") {
  Rng rng(derive_stream(99, 1));
  for (int i = 0; i < 200; ++i) {
    const double a = 0.2 + 10.0 * rng.uniform_unit();
    const double b = 0.2 + 10.0 * rng.uniform_unit();
    const double x = rng.uniform_unit();
    const double lhs = regularized_incomplete_beta(a, b, x);
    const double rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(5e-9));
    CHECK(lhs >= 0.0);
    CHECK(lhs <= 1.0);
  }
}

TEST_CASE("incomplete beta is monotone in x") {
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double x = i / 50.0;
    const double v = regularized_incomplete_beta(2.5, 3.5, x);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("incomplete beta domain errors") {
  CHECK_ERRC(regularized_incomplete_beta(0.0, 1.0, 0.5), invalid_argument);
  CHECK_ERRC(regularized_incomplete_beta(1.0, -2.0, 0.5), invalid_argument);
  CHECK_ERRC(regularized_incomplete_beta(1.0, 1.0, -0.1), invalid_argument);
  CHECK_ERRC(regularized_incomplete_beta(1.0, 1.0, 1.1), invalid_argument);
}

TEST_CASE("F distribution boundary and complement behavior") {
  CHECK(f_distribution_cdf(0.0, 3, 7) == 0.0);
  CHECK(f_distribution_sf(0.0, 3, 7) == 1.0);
  CHECK(f_distribution_cdf(std::numeric_limits<double>::infinity(), 3, 7) ==
        1.0);
  CHECK(f_distribution_sf(std::numeric_limits<double>::infinity(), 3, 7) ==
        0.0);

  for (double f : {0.1, 0.9, 2.0, 13.5, 250.0}) {
    const double cdf = f_distribution_cdf(f, 1, 4);
    const double sf = f_distribution_sf(f, 1, 4);
    CHECK(cdf + sf == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sf >= 0.0);
    CHECK(sf <= 1.0);
  }

  // The median of F(d, d) is exactly 1 by the reflection symmetry of the
  // beta function at x = 1/2.
  for (int d : {1, 2, 6, 11}) {
    CHECK(f_distribution_cdf(1.0, d, d) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("F distribution tail matches a t-distribution integral") {
  // F(1, nu) equals the square of a t_nu variate; compare the tail of
  // our CDF against direct numeric integration of the t density.
  for (double f : {2.0, 7.7088, 13.5}) {
    for (int nu : {4, 9}) {
      const double ours = f_distribution_sf(f, 1, nu);
      const double oracle = f_tail_via_t(f, nu);
      CHECK(ours == doctest::Approx(oracle).epsilon(1e-6));
    }
  }
}

TEST_CASE("F distribution is monotone in f") {
  double prev = -1.0;
  for (double f = 0.0; f <= 30.0; f += 0.5) {
    const double v = f_distribution_cdf(f, 5, 12);
    CHECK(v >= prev);
    prev = v;
  }
}
