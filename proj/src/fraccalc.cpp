#include "fracfem/fraccalc.hpp"

#include <cmath>

#include "fracfem/error.hpp"
#include "fracfem/special.hpp"

namespace fracfem {

namespace {

// Gamma(p+1) / Gamma(p+1+g), via logs to stay finite for large arguments.
double power_rule_factor(double p, double g) {
    const double top = p + 1.0;
    const double bottom = p + 1.0 + g;
    if (bottom > 0.0) return std::exp(lgamma_fn(top) - lgamma_fn(bottom));
    return gamma_fn(top) * rgamma_fn(bottom);
}

void check_left(const PowerSum& g, const char* who) {
    if (!g.all_left()) throw UnsupportedFormError(std::string(who) + ": right-sided PowerSum");
}

}  // namespace

double rl_integral_power(double gamma, double beta_exp, double x) {
    if (!(gamma > 0.0)) throw DomainError("rl_integral_power: order must be positive");
    if (!(beta_exp > -1.0)) throw DomainError("rl_integral_power: exponent must exceed -1");
    if (x < 0.0) throw DomainError("rl_integral_power: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return power_rule_factor(beta_exp, gamma) * std::pow(x, beta_exp + gamma);
}

double rl_derivative_power(double order, double p_exp, double x) {
    if (!(order > 0.0 && order < 2.0)) throw DomainError("rl_derivative_power: order must lie in (0, 2)");
    if (!(p_exp > -1.0)) throw DomainError("rl_derivative_power: exponent must exceed -1");
    if (!(x > 0.0)) throw DomainError("rl_derivative_power: x must be positive");
    const double c = gamma_fn(p_exp + 1.0) * rgamma_fn(p_exp + 1.0 - order);
    if (c == 0.0) return 0.0;
    return c * std::pow(x, p_exp - order);
}

double rl_integral_powersum_at(double gamma, const PowerSum& g, double x) {
    check_left(g, "rl_integral_powersum_at");
    double sum = 0.0;
    for (const auto& t : g.terms()) {
        const double y = x - t.anchor;
        if (y <= 0.0) continue;
        sum += t.coeff * rl_integral_power(gamma, t.exponent, y);
    }
    return sum;
}

PowerSum rl_integral(double gamma, const PowerSum& g) {
    check_left(g, "rl_integral");
    if (!(gamma > 0.0)) throw DomainError("rl_integral: order must be positive");
    PowerSum out;
    for (const auto& t : g.terms())
        out.add({t.coeff * power_rule_factor(t.exponent, gamma), t.anchor, t.exponent + gamma,
                 Side::left});
    return out;
}

PowerSum rl_derivative(double order, const PowerSum& g) {
    check_left(g, "rl_derivative");
    if (!(order > 0.0 && order < 2.0)) throw DomainError("rl_derivative: order must lie in (0, 2)");
    PowerSum out;
    for (const auto& t : g.terms()) {
        const double c = gamma_fn(t.exponent + 1.0) * rgamma_fn(t.exponent + 1.0 - order);
        if (c == 0.0) continue;
        const double p = t.exponent - order;
        if (!(p > -1.0))
            throw UnsupportedFormError("rl_derivative: result exponent is not integrable");
        out.add({t.coeff * c, t.anchor, p, Side::left});
    }
    return out;
}

double weighted_endpoint_integral(const Field& g, FracOrder alpha, QuadratureRule rule) {
    rule.validate();
    const double a = alpha.value();
    const double scale = rgamma_fn(a);
    switch (rule.kind) {
        case QuadratureRule::Kind::gauss_jacobi:
            return scale * integrate_field(g, {1.0, a - 1.0}, rule.points);
        case QuadratureRule::Kind::gauss_legendre: {
            // Plain composite Gauss-Legendre on each smooth piece, weight included.
            std::vector<double> cuts = g.breakpoints();
            cuts.insert(cuts.begin(), 0.0);
            cuts.push_back(1.0);
            const auto& gl = gauss_legendre(rule.points);
            double total = 0.0;
            for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
                const double lo = cuts[p], half = 0.5 * (cuts[p + 1] - cuts[p]);
                for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
                    const double t = lo + half * (1.0 + gl.nodes[k]);
                    total += half * gl.weights[k] * g(t) * std::pow(1.0 - t, a - 1.0);
                }
            }
            return scale * total;
        }
        case QuadratureRule::Kind::adaptive_composite: {
            std::vector<double> cuts = g.breakpoints();
            cuts.insert(cuts.begin(), 0.0);
            cuts.push_back(1.0);
            double total = 0.0;
            for (std::size_t p = 0; p + 1 < cuts.size(); ++p)
                total += integrate_adaptive(
                    [&](double t) { return g(t) * std::pow(1.0 - t, a - 1.0); }, cuts[p],
                    cuts[p + 1], rule.tol);
            return scale * total;
        }
    }
    return 0.0;
}

}  // namespace fracfem
