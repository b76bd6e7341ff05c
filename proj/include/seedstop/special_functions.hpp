#pragma once

namespace seedstop {

// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0, 1].
// Continued fraction with modified Lentz iteration, relative tolerance
// 1e-10. See https://en.wikipedia.org/wiki/Beta_function
double regularized_incomplete_beta(double a, double b, double x);

// CDF of the F distribution with (d1, d2) degrees of freedom at f >= 0.
double f_distribution_cdf(double f, double d1, double d2);

// Upper tail 1 - CDF, computed directly from the mirrored incomplete beta
// so tiny tail probabilities do not cancel.
double f_distribution_sf(double f, double d1, double d2);

}  // namespace seedstop
