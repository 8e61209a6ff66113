#include "fracfem/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <string>
#include <tuple>

#include "fracfem/error.hpp"
#include "fracfem/special.hpp"

namespace fracfem {

namespace {

// Monic Jacobi recurrence p_{k+1} = (x - diag[k]) p_k - off2[k] p_{k-1}, with
// coefficients up to index `count - 1` (off2[0] is unused).
struct JacobiRecurrence {
    std::vector<double> diag;
    std::vector<double> off2;
    double mu0 = 0.0;
};

JacobiRecurrence jacobi_recurrence(int count, double a, double b) {
    JacobiRecurrence r;
    r.diag.resize(count);
    r.off2.assign(count, 0.0);
    const double ab = a + b;
    r.diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < count; ++k) {
        const double t = 2.0 * k + ab;
        r.diag[k] = (b * b - a * a) / (t * (t + 2.0));
    }
    if (count > 1) r.off2[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    for (int k = 2; k < count; ++k) {
        const double t = 2.0 * k + ab;
        r.off2[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    r.mu0 = std::exp((ab + 1.0) * std::log(2.0) + lgamma_fn(a + 1.0) + lgamma_fn(b + 1.0) -
                     lgamma_fn(ab + 2.0));
    return r;
}

struct OrthoEval {
    double sum_sq;  // sum_{k<n} q_k(x)^2
    double qn;
    double dqn;
};

// Orthonormal recurrence; `r` must hold n + 1 coefficients.
OrthoEval eval_orthonormal(const JacobiRecurrence& r, int n, double x) {
    double q_prev = 0.0, dq_prev = 0.0;
    double q = 1.0 / std::sqrt(r.mu0), dq = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        sum_sq += q * q;
        const double bk = k > 0 ? std::sqrt(r.off2[k]) : 0.0;
        const double bk1 = std::sqrt(r.off2[k + 1]);
        const double q_next = ((x - r.diag[k]) * q - bk * q_prev) / bk1;
        const double dq_next = (q + (x - r.diag[k]) * dq - bk * dq_prev) / bk1;
        q_prev = q;
        dq_prev = dq;
        q = q_next;
        dq = dq_next;
    }
    return {sum_sq, q, dq};
}

GaussRule compute_gauss_jacobi(int n, double a, double b) {
    const JacobiRecurrence r = jacobi_recurrence(n + 1, a, b);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = r.diag[0];
        rule.weights[0] = r.mu0;
        return rule;
    }

    // Golub-Welsch for starting values, then Newton on q_n and Christoffel weights.
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = r.diag[k];
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(r.off2[k]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        for (int it = 0; it < 3; ++it) {
            const OrthoEval e = eval_orthonormal(r, n, x);
            if (e.dqn == 0.0) break;
            const double step = e.qn / e.dqn;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / eval_orthonormal(r, n, x).sum_sq;
    }
    return rule;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

using RuleKey = std::tuple<int, double, double>;

std::map<RuleKey, std::unique_ptr<GaussRule>>& rule_cache() {
    static std::map<RuleKey, std::unique_ptr<GaussRule>> cache;
    return cache;
}

// Weighted sum on [a, b] after the affine map from [-1, 1].
template <typename Weight>
double mapped_sum(const GaussRule& rule, const ScalarFn& g, double a, double b, Weight&& extra) {
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double t = a + half * (1.0 + rule.nodes[k]);
        sum += rule.weights[k] * g(t) * extra(t);
    }
    return sum;
}

double integrate_weighted_impl(const ScalarFn& g, double a, double b, EndpointWeight left,
                               EndpointWeight right, int points, int depth) {
    if (depth > 400) throw QuadratureFailure("integrate_weighted: splitting did not terminate", 0.0);
    const double len = b - a;
    const bool l_active = left.exponent != 0.0;
    const bool r_active = right.exponent != 0.0;
    const double dl = a - left.point;
    const double dr = right.point - b;

    if (l_active && dl > 0.0 && dl < len) {
        const double c = a + dl;
        return integrate_weighted_impl(g, a, c, left, right, points, depth + 1) +
               integrate_weighted_impl(g, c, b, left, right, points, depth + 1);
    }
    if (r_active && dr > 0.0 && dr < len) {
        const double c = b - dr;
        return integrate_weighted_impl(g, a, c, left, right, points, depth + 1) +
               integrate_weighted_impl(g, c, b, left, right, points, depth + 1);
    }

    const bool l_end = l_active && dl == 0.0;
    const bool r_end = r_active && dr == 0.0;
    auto lw = [&](double t) { return l_active ? std::pow(t - left.point, left.exponent) : 1.0; };
    auto rw = [&](double t) { return r_active ? std::pow(right.point - t, right.exponent) : 1.0; };
    const double half = 0.5 * len;

    if (l_end && r_end) {
        const auto& rule = gauss_jacobi(points, right.exponent, left.exponent);
        return std::pow(half, 1.0 + left.exponent + right.exponent) *
               mapped_sum(rule, g, a, b, [](double) { return 1.0; });
    }
    if (l_end) {
        const auto& rule = gauss_jacobi(points, 0.0, left.exponent);
        return std::pow(half, 1.0 + left.exponent) * mapped_sum(rule, g, a, b, rw);
    }
    if (r_end) {
        const auto& rule = gauss_jacobi(points, right.exponent, 0.0);
        return std::pow(half, 1.0 + right.exponent) * mapped_sum(rule, g, a, b, lw);
    }
    const auto& rule = gauss_legendre(points);
    return half * mapped_sum(rule, g, a, b, [&](double t) { return lw(t) * rw(t); });
}

// 7-point Gauss / 15-point Kronrod (QUADPACK qk15 abscissae).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const ScalarFn& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

const GaussRule& gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw ArgumentError("gauss_jacobi: need at least one point");
    if (!(a > -1.0) || !(b > -1.0)) throw ArgumentError("gauss_jacobi: exponents must exceed -1");
    std::lock_guard lock(cache_mutex());
    auto& cache = rule_cache();
    const RuleKey key{n, a, b};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<GaussRule>(compute_gauss_jacobi(n, a, b))).first;
    return *it->second;
}

const GaussRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

void QuadratureRule::validate() const {
    if (points < 1) throw ArgumentError("QuadratureRule: points must be >= 1");
    if (!(tol > 0.0)) throw ArgumentError("QuadratureRule: tol must be positive");
}

double integrate_weighted(const ScalarFn& g, double a, double b, EndpointWeight left,
                          EndpointWeight right, int points) {
    if (b == a) return 0.0;
    if (!(b > a)) throw ArgumentError("integrate_weighted: need a < b");
    if ((left.exponent != 0.0 && left.point > a) || (right.exponent != 0.0 && right.point < b))
        throw ArgumentError("integrate_weighted: weight points must bracket the interval");
    if (!(left.exponent > -1.0) || !(right.exponent > -1.0))
        throw ArgumentError("integrate_weighted: weight exponents must exceed -1");
    return integrate_weighted_impl(g, a, b, left, right, points, 0);
}

double integrate_adaptive(const ScalarFn& f, double a, double b, double tol, int max_intervals) {
    if (b == a) return 0.0;
    std::priority_queue<Segment> heap;
    Segment first = kronrod15(f, a, b);
    double total = first.value, error = first.error;
    heap.push(first);
    int intervals = 1;
    for (;;) {
        if (!std::isfinite(total) || !std::isfinite(error))
            throw QuadratureFailure("integrate_adaptive: integrand is not finite on the interval", error);
        if (error <= std::max(tol * std::abs(total), 1e-300)) break;
        if (intervals >= max_intervals)
            throw QuadratureFailure("integrate_adaptive: tolerance not reached within " +
                                        std::to_string(max_intervals) + " intervals",
                                    error);
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw QuadratureFailure("integrate_adaptive: interval collapsed", error);
        const Segment lo = kronrod15(f, worst.a, mid);
        const Segment hi = kronrod15(f, mid, worst.b);
        total += lo.value + hi.value - worst.value;
        error += lo.error + hi.error - worst.error;
        heap.push(lo);
        heap.push(hi);
        ++intervals;
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        heap.pop();
    }
    return total;
}

}  // namespace fracfem
