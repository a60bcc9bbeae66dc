#pragma once

namespace linfoot {

/// Digamma psi(x) for x > 0, absolute error <= 1e-10.
/// Throws domain_error for x <= 0.
double digamma(double x);

/// Standard normal cumulative distribution function.
double std_normal_cdf(double x);

/// Standard normal density.
double std_normal_pdf(double x);

/// Inverse standard normal CDF for p in (0,1) with |Phi(result) - p| <= 1e-12.
/// Throws domain_error outside (0,1).
double std_normal_quantile(double p);

} // namespace linfoot
