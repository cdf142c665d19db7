#pragma once

namespace crisis {

double std_normal_pdf(double x);

/// Phi(x), absolute error well below 1e-9 over the full double range.
double std_normal_cdf(double x);

/// Phi^-1(p) for p strictly inside (0, 1); throws Error otherwise.
/// Wichura's AS 241 (PPND16), roughly full double precision.
double std_normal_quantile(double p);

/// P(X <= h, Y <= k) for a standard bivariate normal with correlation rho,
/// |rho| < 1 (throws Error otherwise). Evaluates the single-integral
/// reduction of the density over the correlation parameter by adaptive
/// quadrature; absolute error <= 1e-10.
double bvn_cdf(double h, double k, double rho);

/// P(X > h, Y > k); same accuracy contract as bvn_cdf.
double bvn_upper_orthant(double h, double k, double rho);

/// Bivariate standard normal density at (x, y) with correlation rho.
double bvn_density(double x, double y, double rho);

}  // namespace crisis
