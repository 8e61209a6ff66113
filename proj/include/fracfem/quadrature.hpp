#pragma once

#include <functional>
#include <vector>

namespace fracfem {

using ScalarFn = std::function<double(double)>;

/// Nodes and weights on the reference interval [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule. Rules are computed once and cached.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b on [-1, 1], a, b > -1.
const GaussRule& gauss_jacobi(int n, double a, double b);

struct QuadratureRule {
    enum class Kind { gauss_legendre, gauss_jacobi, adaptive_composite };

    Kind kind = Kind::gauss_jacobi;
    int points = 32;
    double tol = 1e-12;

    void validate() const;
};

/// Algebraic endpoint weight |t - point|^exponent; exponent 0 means no weight.
struct EndpointWeight {
    double point = 0.0;
    double exponent = 0.0;
};

/// Computes int_a^b g(t) (t - left.point)^left.exponent (right.point - t)^right.exponent dt
/// with left.point <= a < b <= right.point and g smooth on [a, b].
///
/// A weight whose point coincides with the interval end is absorbed into a
/// Gauss-Jacobi rule; a weight whose point lies closer to the interval than
/// its length is handled by splitting geometrically toward that point, so each
/// piece is at least one piece-length away from the singularity.
double integrate_weighted(const ScalarFn& g, double a, double b, EndpointWeight left,
                          EndpointWeight right, int points);

/// Globally adaptive 7/15 Gauss-Kronrod. Throws QuadratureFailure (carrying the
/// final error estimate) when the relative tolerance is not met within
/// max_intervals subintervals.
double integrate_adaptive(const ScalarFn& f, double a, double b, double tol,
                          int max_intervals = 4000);

}  // namespace fracfem
