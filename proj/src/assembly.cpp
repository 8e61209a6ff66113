#include "fracfem/assembly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "fracfem/error.hpp"
#include "fracfem/fraccalc.hpp"
#include "fracfem/special.hpp"
#include "fracfem/toeplitz.hpp"

namespace fracfem {

namespace {

constexpr int kElementPoints = 8;
constexpr double kDegenerateThreshold = 1e-8;

// sum_{d=-2..2} (1,-4,6,-4,1)_d (n+d)_+^p, the fourth difference of t_+^p at n.
double fourth_difference(int n, double p) {
    if (n >= 8) {
        // Binomial series of the symmetric difference; avoids the cancellation
        // of five nearly equal terms far from the diagonal.
        const double inv2 = 1.0 / (static_cast<double>(n) * n);
        double binom = 1.0, sum = 0.0, npow = 1.0, two_k = 1.0;
        for (int k = 1; k <= 200; ++k) {
            binom *= (p - k + 1) / k;
            two_k *= 2.0;
            if (k % 2 != 0) continue;
            npow *= inv2;
            if (k < 4) continue;
            const double term = binom * 2.0 * (two_k - 4.0) * npow;
            sum += term;
            if (k >= 6 && std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return std::pow(static_cast<double>(n), p) * sum;
    }
    static constexpr std::array<double, 5> w{1.0, -4.0, 6.0, -4.0, 1.0};
    double sum = 0.0;
    for (int d = -2; d <= 2; ++d) {
        const int t = n + d;
        if (t > 0) sum += w[d + 2] * std::pow(static_cast<double>(t), p);
    }
    return sum;
}

struct HatJumps {
    std::array<double, 3> at;
    std::array<double, 3> jump;
};

HatJumps hat_jumps(const Mesh& mesh, int j) {
    const double hl = mesh.element_length(j - 1), hr = mesh.element_length(j);
    return {{mesh.node(j - 1), mesh.node(j), mesh.node(j + 1)},
            {1.0 / hl, -(1.0 / hl + 1.0 / hr), 1.0 / hr}};
}

// int int phi_j(a) phi_i(b) (b - a)^(-1-alpha) da db over a pair of linear pieces
// with a < b, bisecting until the gap is at least twice the longer piece.
double far_pair(double a0, double a1, double fa0, double fa1, double b0, double b1, double fb0,
                double fb1, double alpha, int depth) {
    const double la = a1 - a0, lb = b1 - b0, gap = b0 - a1;
    if (gap < 2.0 * std::max(la, lb) && depth < 60) {
        if (la >= lb) {
            const double am = 0.5 * (a0 + a1), fm = 0.5 * (fa0 + fa1);
            return far_pair(a0, am, fa0, fm, b0, b1, fb0, fb1, alpha, depth + 1) +
                   far_pair(am, a1, fm, fa1, b0, b1, fb0, fb1, alpha, depth + 1);
        }
        const double bm = 0.5 * (b0 + b1), fm = 0.5 * (fb0 + fb1);
        return far_pair(a0, a1, fa0, fa1, b0, bm, fb0, fm, alpha, depth + 1) +
               far_pair(a0, a1, fa0, fa1, bm, b1, fm, fb1, alpha, depth + 1);
    }
    const auto& gl = gauss_legendre(kElementPoints);
    double sum = 0.0;
    for (int p = 0; p < kElementPoints; ++p) {
        const double ta = 0.5 * (1.0 + gl.nodes[p]);
        const double a = a0 + la * ta, fa = fa0 + (fa1 - fa0) * ta;
        for (int q = 0; q < kElementPoints; ++q) {
            const double tb = 0.5 * (1.0 + gl.nodes[q]);
            const double b = b0 + lb * tb, fb = fb0 + (fb1 - fb0) * tb;
            sum += gl.weights[p] * gl.weights[q] * fa * fb * std::pow(b - a, -1.0 - alpha);
        }
    }
    return 0.25 * la * lb * sum;
}

double far_field_entry(const Mesh& mesh, int i, int j, double alpha) {
    // phi_j pieces: [x_{j-1}, x_j] rising, [x_j, x_{j+1}] falling; likewise phi_i.
    const std::array<std::array<double, 4>, 2> pj{{{mesh.node(j - 1), mesh.node(j), 0.0, 1.0},
                                                    {mesh.node(j), mesh.node(j + 1), 1.0, 0.0}}};
    const std::array<std::array<double, 4>, 2> pi{{{mesh.node(i - 1), mesh.node(i), 0.0, 1.0},
                                                    {mesh.node(i), mesh.node(i + 1), 1.0, 0.0}}};
    double sum = 0.0;
    for (const auto& a : pj)
        for (const auto& b : pi) sum += far_pair(a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3], alpha, 0);
    return -rgamma_fn(-alpha) * sum;
}

// Integrates g * psi_left and g * psi_right over each element, optionally against
// the endpoint weight (1 - t)^exponent, and scatters into interior node slots.
Eigen::VectorXd scatter_element_moments(const Mesh& mesh, const Field& g, EndpointWeight right) {
    const int n = mesh.interior();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    if (g.is_zero()) return out;
    for (int e = 0; e < mesh.elements(); ++e) {
        const double a = mesh.node(e), b = mesh.node(e + 1), h = b - a;
        if (e >= 1) {
            const ScalarFn falling = [b, h](double t) { return (b - t) / h; };
            out[e - 1] += integrate_field(g, a, b, falling, right, kElementPoints);
        }
        if (e + 1 <= n) {
            const ScalarFn rising = [a, h](double t) { return (t - a) / h; };
            out[e] += integrate_field(g, a, b, rising, right, kElementPoints);
        }
    }
    return out;
}

}  // namespace

Tridiagonal Tridiagonal::zero(int n) {
    return {Eigen::VectorXd::Zero(std::max(n - 1, 0)), Eigen::VectorXd::Zero(n),
            Eigen::VectorXd::Zero(std::max(n - 1, 0))};
}

bool Tridiagonal::is_zero() const {
    return lower.isZero(0.0) && diag.isZero(0.0) && upper.isZero(0.0);
}

Eigen::VectorXd Tridiagonal::apply(const Eigen::VectorXd& x) const {
    const int n = size();
    Eigen::VectorXd y = diag.cwiseProduct(x);
    for (int k = 0; k + 1 < n; ++k) {
        y[k] += upper[k] * x[k + 1];
        y[k + 1] += lower[k] * x[k];
    }
    return y;
}

void Tridiagonal::add_to(Eigen::MatrixXd& m) const {
    const int n = size();
    for (int k = 0; k < n; ++k) m(k, k) += diag[k];
    for (int k = 0; k + 1 < n; ++k) {
        m(k, k + 1) += upper[k];
        m(k + 1, k) += lower[k];
    }
}

Eigen::MatrixXd Tridiagonal::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
    add_to(m);
    return m;
}

Eigen::VectorXd lead_stencil(int m, FracOrder alpha) {
    if (m < 2) throw ArgumentError("lead_stencil: need at least 2 elements");
    const int n = m - 1;
    const double a = alpha.value();
    const double p = 3.0 - a;
    const double scale = -rgamma_fn(4.0 - a) * std::pow(1.0 / m, 1.0 - a);
    Eigen::VectorXd stencil = Eigen::VectorXd::Zero(2 * n - 1);
    for (int d = std::max(-1, 1 - n); d <= n - 1; ++d) stencil[d + n - 1] = scale * fourth_difference(d, p);
    return stencil;
}

Eigen::MatrixXd assemble_lead(const Mesh& mesh, FracOrder alpha) {
    const int n = mesh.interior();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    if (mesh.is_uniform()) {
        const Eigen::VectorXd t = lead_stencil(mesh.elements(), alpha);
        for (int j = 0; j < n; ++j)
            for (int i = std::max(j - 1, 0); i < n; ++i) A(i, j) = t[i - j + n - 1];
        return A;
    }
    const double a = alpha.value();
    const double p = 3.0 - a;
    const double k = rgamma_fn(4.0 - a);
    for (int i = 1; i <= n; ++i) {
        const HatJumps di = hat_jumps(mesh, i);
        for (int j = 1; j <= std::min(i + 1, n); ++j) {
            const HatJumps cj = hat_jumps(mesh, j);
            double sum = 0.0, magnitude = 0.0;
            for (int u = 0; u < 3; ++u) {
                for (int v = 0; v < 3; ++v) {
                    const double gap = di.at[v] - cj.at[u];
                    if (gap <= 0.0) continue;
                    const double term = cj.jump[u] * di.jump[v] * std::pow(gap, p);
                    sum += term;
                    magnitude += std::abs(term);
                }
            }
            if (j <= i - 3 && magnitude > 1e5 * std::abs(sum))
                A(i - 1, j - 1) = far_field_entry(mesh, i, j, a);
            else
                A(i - 1, j - 1) = -k * sum;
        }
    }
    return A;
}

Tridiagonal assemble_mass_q(const Mesh& mesh, const Field& q) {
    const int n = mesh.interior();
    Tridiagonal M = Tridiagonal::zero(n);
    if (q.is_zero()) return M;
    for (int e = 0; e < mesh.elements(); ++e) {
        const double a = mesh.node(e), b = mesh.node(e + 1), h = b - a;
        const auto psi0 = [b, h](double t) { return (b - t) / h; };
        const auto psi1 = [a, h](double t) { return (t - a) / h; };
        const bool left_interior = e >= 1, right_interior = e + 1 <= n;
        if (left_interior)
            M.diag[e - 1] += integrate_field(
                q, a, b, [&](double t) { return psi0(t) * psi0(t); }, {}, kElementPoints);
        if (right_interior)
            M.diag[e] += integrate_field(
                q, a, b, [&](double t) { return psi1(t) * psi1(t); }, {}, kElementPoints);
        if (left_interior && right_interior) {
            const double off = integrate_field(
                q, a, b, [&](double t) { return psi0(t) * psi1(t); }, {}, kElementPoints);
            M.upper[e - 1] += off;
            M.lower[e - 1] += off;
        }
    }
    return M;
}

Eigen::VectorXd load_vector(const Mesh& mesh, const Field& g) {
    return scatter_element_moments(mesh, g, {});
}

Eigen::VectorXd endpoint_moments(const Mesh& mesh, const Field& q, FracOrder alpha) {
    const double a = alpha.value();
    return rgamma_fn(a) * scatter_element_moments(mesh, q, {1.0, a - 1.0});
}

SingularPair build_singular_pair(const ProblemSpec& spec) {
    const double a = spec.alpha.value();
    const double p = spec.bc == BoundaryCondition::dirichlet ? a - 1.0 : a - 2.0;
    SingularPair pair{PowerSum{{1.0, 0.0, p, Side::left}, {-1.0, 0.0, 2.0, Side::left}},
                      PowerSum::monomial(-2.0 * rgamma_fn(3.0 - a), 2.0 - a),
                      1.0,
                      1.0,
                      weighted_endpoint_integral(spec.f, spec.alpha),
                      {},
                      {},
                      spec.bc};
    Field core = Field::from_power_sum(pair.c1);
    if (!spec.q.is_zero()) {
        const Field q_us = spec.q * Field::from_power_sum(pair.u_s);
        pair.denominator = 1.0 + weighted_endpoint_integral(q_us, spec.alpha);
        if (std::abs(pair.denominator) < kDegenerateThreshold)
            throw DegenerateSplittingError(
                "build_singular_pair: 1 + I^alpha(q u_s)(1) vanishes; choose a different companion "
                "to x^2",
                pair.denominator);
        pair.c0 = 1.0 / pair.denominator;
        core = core - q_us;
    }
    pair.Q = pair.c0 * core;
    pair.f_tilde = spec.f + (pair.c0 * pair.f_moment) * core;
    return pair;
}

bool AssembledSystem::has_rank_one() const {
    return r.size() > 0 && s.size() > 0 && !s.isZero(0.0) && !r.isZero(0.0);
}

Eigen::MatrixXd AssembledSystem::matrix() const {
    Eigen::MatrixXd K = lead;
    mass.add_to(K);
    if (has_rank_one()) K.noalias() += r * s.transpose();
    return K;
}

Eigen::VectorXd AssembledSystem::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = stencil ? toeplitz_matvec(*stencil, x) : Eigen::VectorXd(lead * x);
    y += mass.apply(x);
    if (has_rank_one()) y += r * s.dot(x);
    return y;
}

AssembledSystem assemble_system(const ProblemSpec& spec, const Mesh& mesh, Method method) {
    spec.validate();
    if (method == Method::standard && spec.bc != BoundaryCondition::dirichlet)
        throw ArgumentError("assemble_system: the standard method supports Dirichlet conditions only");
    AssembledSystem sys{method,
                        mesh,
                        spec.alpha,
                        assemble_lead(mesh, spec.alpha),
                        std::nullopt,
                        assemble_mass_q(mesh, spec.q),
                        {},
                        {},
                        {},
                        std::nullopt};
    if (mesh.is_uniform()) sys.stencil = lead_stencil(mesh.elements(), spec.alpha);
    if (method == Method::standard) {
        sys.load = load_vector(mesh, spec.f);
        return sys;
    }
    sys.pair = build_singular_pair(spec);
    sys.r = load_vector(mesh, sys.pair->Q);
    sys.s = spec.q.is_zero() ? Eigen::VectorXd::Zero(mesh.interior())
                             : endpoint_moments(mesh, spec.q, spec.alpha);
    sys.load = load_vector(mesh, sys.pair->f_tilde);
    return sys;
}

}  // namespace fracfem
