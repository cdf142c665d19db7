#pragma once

namespace crisis {

/// log C(n, k); -infinity when the coefficient is zero (k < 0 or k > n).
double log_choose(long n, long k);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper-tail probability of a chi-square variate with `df` degrees of
/// freedom, via Q(df/2, x/2).
double chi_square_sf(double x, int df);

}  // namespace crisis
