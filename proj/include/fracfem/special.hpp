#pragma once

namespace fracfem {

/// Euler's Gamma function for x > 0 (Lanczos, g = 7, nine terms; ~15 digits).
/// Throws DomainError for x <= 0.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double lgamma_fn(double x);

/// 1 / Gamma(x) for any real x; exactly zero at the poles 0, -1, -2, ...
double rgamma_fn(double x);

/// Beta(a, b) = exp(lnGamma(a) + lnGamma(b) - lnGamma(a + b)), a, b > 0.
double beta_fn(double a, double b);

}  // namespace fracfem
