#include "seedstop/special_functions.hpp"

#include <cmath>
#include <sstream>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

constexpr double kEps = 1e-10;
constexpr double kTiny = 1e-300;

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz method. Converges quickly for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double numer = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + numer * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    numer = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + numer * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  raise(Errc::invalid_argument, "incomplete beta did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    raise(Errc::invalid_argument, "incomplete beta requires a, b > 0");
  }
  if (!(x >= 0.0) || x > 1.0) {
    std::ostringstream os;
    os << "incomplete beta argument " << x << " is outside [0, 1]";
    raise(Errc::invalid_argument, os.str());
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  // Symmetric prefactor x^a (1-x)^b Gamma(a+b) / (Gamma(a) Gamma(b)).
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_distribution_cdf(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    raise(Errc::invalid_argument, "F distribution requires d1, d2 > 0");
  }
  if (!(f >= 0.0)) {
    raise(Errc::invalid_argument, "F statistic must be >= 0");
  }
  if (std::isinf(f)) return 1.0;
  return regularized_incomplete_beta(0.5 * d1, 0.5 * d2,
                                     d1 * f / (d1 * f + d2));
}

double f_distribution_sf(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    raise(Errc::invalid_argument, "F distribution requires d1, d2 > 0");
  }
  if (!(f >= 0.0)) {
    raise(Errc::invalid_argument, "F statistic must be >= 0");
  }
  if (std::isinf(f)) return 0.0;
  return regularized_incomplete_beta(0.5 * d2, 0.5 * d1,
                                     d2 / (d1 * f + d2));
}

}  // namespace seedstop
