#pragma once

// Reference computations that do not go through the library's own quadrature
// or Gamma implementation.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh() {
    static boost::math::quadrature::tanh_sinh<double> ts(15);
    return ts;
}

/// int_a^b h(t, t - a, b - t) by tanh-sinh. The two distances are exact near
/// their endpoint, so weights like (b - t)^p can be evaluated without cancellation.
inline double integrate_ends(const std::function<double(double, double, double)>& h, double a, double b) {
    if (!(a < b)) return 0.0;
    return tanh_sinh().integrate(
        [&](double t, double tc) { return tc < 0 ? h(t, -tc, b - t) : h(t, t - a, tc); }, a, b, 1e-14);
}

/// int_a^b f with tanh-sinh; singularities at a = 0 are fine.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
    return integrate_ends([&f](double t, double, double) { return f(t); }, a, b);
}

/// Same, split at the given interior points.
inline double integrate_split(const std::function<double(double)>& f, double a, double b,
                              std::vector<double> cuts) {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(a, cuts[i]), hi = std::min(b, cuts[i + 1]);
        if (lo < hi) total += integrate(f, lo, hi);
    }
    return total;
}

/// (0I^gamma g)(x) from the defining convolution.
inline double rl_integral(const std::function<double(double)>& g, double gamma, double x,
                          std::vector<double> cuts = {}) {
    cuts.push_back(0.0);
    cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(0.0, cuts[i]), hi = std::min(x, cuts[i + 1]);
        auto kernel = [&](double t, double, double to_hi) { return std::pow((x - hi) + to_hi, gamma - 1.0) * g(t); };
        total += integrate_ends(kernel, lo, hi);
    }
    return total / std::tgamma(gamma);
}

/// Left and right order-s derivatives of a continuous piecewise-linear
/// function vanishing at 0 and 1, from its element slopes:
/// D0^s v(x) = 1/Gamma(1-s) int_0^x (x-t)^(-s) v'(t) dt, mirrored on the right.
inline double pl_left_derivative(const std::vector<double>& nodes, const std::vector<double>& values,
                                 double s, double x) {
    double sum = 0.0;
    for (std::size_t e = 0; e + 1 < nodes.size(); ++e) {
        const double a = nodes[e], b = std::min(nodes[e + 1], x);
        if (!(a < x)) break;
        const double slope = (values[e + 1] - values[e]) / (nodes[e + 1] - nodes[e]);
        sum += slope * (std::pow(x - a, 1.0 - s) - std::pow(x - b, 1.0 - s)) / (1.0 - s);
    }
    return sum / std::tgamma(1.0 - s);
}

inline double pl_right_derivative(const std::vector<double>& nodes, const std::vector<double>& values,
                                  double s, double x) {
    double sum = 0.0;
    for (std::size_t e = nodes.size() - 1; e > 0; --e) {
        const double b = nodes[e], a = std::max(nodes[e - 1], x);
        if (!(b > x)) break;
        const double slope = (values[e] - values[e - 1]) / (nodes[e] - nodes[e - 1]);
        sum -= slope * (std::pow(b - x, 1.0 - s) - std::pow(a - x, 1.0 - s)) / (1.0 - s);
    }
    return sum / std::tgamma(1.0 - s);
}

inline std::vector<double> unit_vector(std::size_t n, std::size_t j) {
    std::vector<double> v(n, 0.0);
    v[j] = 1.0;
    return v;
}

/// -(D0^s phi_j, D1^s phi_i) by quadrature, split at every node.
inline double stiffness_entry(const std::vector<double>& nodes, int i, int j, double alpha) {
    const double s = 0.5 * alpha;
    const auto vi = unit_vector(nodes.size(), i), vj = unit_vector(nodes.size(), j);
    auto integrand = [&](double x) {
        return pl_left_derivative(nodes, vj, s, x) * pl_right_derivative(nodes, vi, s, x);
    };
    return -integrate_split(integrand, 0.0, 1.0, nodes);
}

using big = boost::multiprecision::cpp_bin_float_50;

/// Closed-form stiffness entry evaluated in 50-digit arithmetic:
/// A[i][j] = -1/Gamma(4-alpha) sum_k sum_l c_k d_l (b_l - a_k)_+^(3-alpha), with c, d the
/// second-difference weights of the hats at the node triples.
inline double stiffness_entry_exact(const std::vector<double>& nodes, int i, int j, double alpha) {
    auto weights = [&](int n) {
        const big hl = big(nodes[n]) - big(nodes[n - 1]), hr = big(nodes[n + 1]) - big(nodes[n]);
        return std::vector<big>{1 / hl, -(1 / hl + 1 / hr), 1 / hr};
    };
    const auto c = weights(j), d = weights(i);
    const big p = big(3) - big(alpha);
    big sum = 0;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const big gap = big(nodes[i - 1 + l]) - big(nodes[j - 1 + k]);
            if (gap > 0) sum += c[k] * d[l] * pow(gap, p);
        }
    return static_cast<double>(-sum / boost::multiprecision::tgamma(big(4) - big(alpha)));
}

}  // namespace oracle
