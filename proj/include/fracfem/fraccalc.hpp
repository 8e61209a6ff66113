#pragma once

#include "fracfem/field.hpp"
#include "fracfem/power_sum.hpp"
#include "fracfem/quadrature.hpp"

namespace fracfem {

/// (0I^gamma t^beta)(x) = Gamma(beta+1) / Gamma(beta+1+gamma) * x^(beta+gamma).
double rl_integral_power(double gamma, double beta_exp, double x);

/// (D0^order t^p)(x) for order in (0, 2), p > -1. Vanishes identically when
/// p - order is a negative integer (the kernel of the derivative).
double rl_derivative_power(double order, double p_exp, double x);

/// Term-wise power rule for a left-anchored PowerSum, evaluated at x.
double rl_integral_powersum_at(double gamma, const PowerSum& g, double x);

/// 0I^gamma g as a new left PowerSum.
PowerSum rl_integral(double gamma, const PowerSum& g);

/// D0^order g as a new left PowerSum. Annihilated terms are dropped; any
/// surviving term with exponent <= -1 raises UnsupportedFormError.
PowerSum rl_derivative(double order, const PowerSum& g);

/// (0I^alpha g)(1) = 1/Gamma(alpha) * int_0^1 (1 - t)^(alpha-1) g(t) dt.
double weighted_endpoint_integral(const Field& g, FracOrder alpha, QuadratureRule rule = {});

}  // namespace fracfem
