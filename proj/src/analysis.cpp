#include "fracfem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "fracfem/error.hpp"
#include "fracfem/fraccalc.hpp"
#include "fracfem/special.hpp"
#include "fracfem/toeplitz.hpp"

namespace fracfem {

namespace {

const ToeplitzOperator& energy_operator(FracOrder alpha, int m) {
    static std::mutex mutex;
    static std::map<std::pair<double, int>, std::unique_ptr<ToeplitzOperator>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{alpha.value(), m}];
    if (!slot) slot = std::make_unique<ToeplitzOperator>(lead_stencil(m, alpha));
    return *slot;
}

std::vector<double> merged_grid(const std::vector<double>& nodes, int sample_m) {
    std::vector<double> grid(nodes);
    grid.reserve(nodes.size() + sample_m + 1);
    for (int j = 0; j <= sample_m; ++j) grid.push_back(static_cast<double>(j) / sample_m);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<double> rates_of(const std::vector<ConvergenceRow>& rows, double ConvergenceRow::*field) {
    std::vector<double> e;
    for (const auto& r : rows) e.push_back(r.*field);
    return convergence_rates(e);
}

std::vector<double> rates_of(const std::vector<ConvergenceRow>& rows, double ErrorNorms::*field) {
    std::vector<double> e;
    for (const auto& r : rows) e.push_back(r.err.*field);
    return convergence_rates(e);
}

}  // namespace

ExactSolution exact_q0(const ProblemSpec& spec) {
    if (!spec.q.is_zero()) throw UnsupportedSourceError("exact_q0: potential must vanish");
    if (!spec.f_power) throw UnsupportedSourceError("exact_q0: source has no closed form");
    const double a = spec.alpha.value();
    const PowerSum F = rl_integral(a, *spec.f_power);
    const double mu = F(1.0);
    const double p = spec.bc == BoundaryCondition::dirichlet ? a - 1.0 : a - 2.0;
    ExactSolution ex{ExactSolution::Kind::closed_form,
                     [F, mu, p](double x) { return -F(x) + mu * std::pow(x, p); },
                     [F, mu](double x) { return -F(x) + mu * x * x; },
                     mu,
                     0,
                     nullptr};
    return ex;
}

ExactSolution reference_solution(const ProblemSpec& spec, int fine_m) {
    auto sol = std::make_shared<const ReconSolution>(solve_reconstruction(spec, Mesh(fine_m)));
    return {ExactSolution::Kind::reference,
            [sol](double x) { return (*sol)(x); },
            [sol](double x) { return sol->regular(x); },
            sol->mu_h,
            fine_m,
            sol};
}

ErrorNorms error_norms(const ScalarFn& approx, const ScalarFn& exact,
                       const std::vector<double>& approx_nodes, FracOrder alpha,
                       const NormOptions& opt) {
    if (opt.sample_m < 1 || opt.energy_m < 2 || opt.points < 1)
        throw ArgumentError("error_norms: invalid sampling options");
    const std::vector<double> grid = merged_grid(approx_nodes, opt.sample_m);
    const auto& gl = gauss_legendre(opt.points);
    double l2 = 0.0, linf = 0.0;
    for (std::size_t p = 0; p + 1 < grid.size(); ++p) {
        const double a = grid[p], half = 0.5 * (grid[p + 1] - grid[p]);
        if (p > 0) linf = std::max(linf, std::abs(approx(a) - exact(a)));
        for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
            const double x = a + half * (1.0 + gl.nodes[k]);
            const double e = approx(x) - exact(x);
            l2 += half * gl.weights[k] * e * e;
            linf = std::max(linf, std::abs(e));
        }
    }
    const int M = opt.energy_m;
    Eigen::VectorXd d(M - 1);
    for (int j = 1; j < M; ++j) {
        const double x = static_cast<double>(j) / M;
        d[j - 1] = approx(x) - exact(x);
    }
    const double energy2 = d.dot(energy_operator(alpha, M).apply(d));
    return {std::sqrt(l2), std::sqrt(std::max(energy2, 0.0)), linf};
}

ErrorNorms error_norms(const ReconSolution& approx, const ExactSolution& exact, ErrorField which,
                       FracOrder alpha, const NormOptions& opt) {
    const auto& nodes = approx.u_r_h.mesh().nodes();
    if (which == ErrorField::regular_part)
        return error_norms([&](double x) { return approx.regular(x); }, exact.u_r, nodes, alpha, opt);
    return error_norms([&](double x) { return approx(x); }, exact.u, nodes, alpha, opt);
}

ErrorNorms error_norms(const StandardSolution& approx, const ExactSolution& exact, FracOrder alpha,
                       const NormOptions& opt) {
    return error_norms([&](double x) { return approx(x); }, exact.u, approx.u_h.mesh().nodes(),
                       alpha, opt);
}

std::vector<double> convergence_rates(const std::vector<double>& errors) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        const double a = errors[k], b = errors[k + 1];
        out.push_back(a > 0.0 && b > 0.0 ? std::log2(a / b) : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

double green_q0(FracOrder alpha, double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw DomainError("green_q0: arguments must lie in [0, 1]");
    const double p = alpha.value() - 1.0;
    const double tail = x > y ? std::pow(x - y, p) : 0.0;
    return (std::pow(1.0 - y, p) * std::pow(x, p) - tail) * rgamma_fn(alpha.value());
}

std::optional<ExpectedRates> expected_rates(Method method, BoundaryCondition bc, double alpha,
                                            double gamma, bool graded) {
    if (method == Method::standard) {
        if (graded) return std::nullopt;
        return ExpectedRates{alpha - 1.0, 0.5 * alpha - 0.5, alpha - 1.0};
    }
    const double shift = bc == BoundaryCondition::dirichlet ? 0.5 : 1.5;
    const double ell = std::min(alpha - shift, gamma);
    const double s = std::min(2.0, alpha + ell);
    return ExpectedRates{s - 0.5, s - 0.5 * alpha, s - 0.5};
}

std::vector<double> ConvergenceReport::rates_l2() const { return rates_of(rows, &ErrorNorms::l2); }
std::vector<double> ConvergenceReport::rates_energy() const {
    return rates_of(rows, &ErrorNorms::energy);
}
std::vector<double> ConvergenceReport::rates_linf() const { return rates_of(rows, &ErrorNorms::linf); }
std::vector<double> ConvergenceReport::rates_mu() const { return rates_of(rows, &ConvergenceRow::err_mu); }

}  // namespace fracfem
