#include "fracfem/solver.hpp"

#include <Eigen/LU>
#include <cmath>
#include <string>
#include <vector>

#include "fracfem/error.hpp"

namespace fracfem {

namespace {

constexpr int kDenseRankOneLimit = 1024;
constexpr double kPivotTolerance = 1e-14;

// Factors K in place and solves for each right-hand side column.
Eigen::MatrixXd factor_and_solve(Eigen::MatrixXd& K, const Eigen::MatrixXd& rhs) {
    const double norm = K.cwiseAbs().rowwise().sum().maxCoeff();
    Eigen::PartialPivLU<Eigen::Ref<Eigen::MatrixXd>> lu(K);
    const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(pivot > kPivotTolerance * norm))
        throw SingularSystemError("dense LU: pivot " + std::to_string(pivot) +
                                      " below tolerance; the discrete problem is not stable on this mesh",
                                  pivot);
    return lu.solve(rhs);
}

ReconSolution compose(const AssembledSystem& sys, Eigen::VectorXd coeffs) {
    const SingularPair& pair = *sys.pair;
    const double mu = pair.c0 * (pair.f_moment - sys.s.dot(coeffs));
    return {PwLinear(sys.mesh, std::move(coeffs)), mu, pair.u_s, pair.bc};
}

}  // namespace

Eigen::VectorXd solve_dense(AssembledSystem sys) {
    Eigen::MatrixXd K = std::move(sys.lead);
    sys.mass.add_to(K);
    if (sys.has_rank_one()) K.noalias() += sys.r * sys.s.transpose();
    return factor_and_solve(K, sys.load);
}

StandardSolution solve_standard(AssembledSystem sys) {
    Mesh mesh = sys.mesh;
    return {PwLinear(std::move(mesh), solve_dense(std::move(sys)))};
}

ReconSolution solve_reconstruction(AssembledSystem sys) {
    if (sys.method != Method::reconstruction || !sys.pair)
        throw ArgumentError("solve_reconstruction: system was not assembled for reconstruction");
    if (sys.size() <= kDenseRankOneLimit || !sys.has_rank_one()) {
        Eigen::MatrixXd K = std::move(sys.lead);
        sys.mass.add_to(K);
        if (sys.has_rank_one()) K.noalias() += sys.r * sys.s.transpose();
        Eigen::VectorXd c = factor_and_solve(K, sys.load);
        return compose(sys, std::move(c));
    }
    Eigen::MatrixXd B = std::move(sys.lead);
    sys.lead.resize(0, 0);
    sys.mass.add_to(B);
    Eigen::MatrixXd rhs(sys.size(), 2);
    rhs.col(0) = sys.load;
    rhs.col(1) = sys.r;
    const Eigen::MatrixXd yz = factor_and_solve(B, rhs);
    const double denom = 1.0 + sys.s.dot(yz.col(1));
    if (!(std::abs(denom) >= kPivotTolerance * (1.0 + sys.s.norm() * yz.col(1).norm())))
        throw SingularSystemError("Sherman-Morrison: rank-one update makes the system singular", denom);
    Eigen::VectorXd c = yz.col(0) - yz.col(1) * (sys.s.dot(yz.col(0)) / denom);
    return compose(sys, std::move(c));
}

ReconSolution solve_reconstruction(const ProblemSpec& spec, const Mesh& mesh) {
    return solve_reconstruction(assemble_system(spec, mesh, Method::reconstruction));
}

IterativeResult solve_iterative(const AssembledSystem& sys, double tol, GmresOptions opt) {
    if (!(tol > 0.0)) throw ArgumentError("solve_iterative: tol must be positive");
    if (opt.restart < 1 || opt.max_iterations < 1)
        throw ArgumentError("solve_iterative: restart and max_iterations must be positive");
    const int n = sys.size();
    const Eigen::VectorXd& b = sys.load;
    const double bnorm = b.norm();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (bnorm == 0.0) return {x, 0, 0.0};

    const int restart = std::min(opt.restart, n);
    int total = 0;
    double rel = 1.0;
    while (total < opt.max_iterations) {
        Eigen::VectorXd r = b - sys.apply(x);
        double beta = r.norm();
        rel = beta / bnorm;
        if (rel <= tol) return {x, total, rel};

        Eigen::MatrixXd V(n, restart + 1);
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(restart + 1, restart);
        std::vector<double> cs(restart), sn(restart);
        Eigen::VectorXd g = Eigen::VectorXd::Zero(restart + 1);
        g[0] = beta;
        V.col(0) = r / beta;
        int k = 0;
        for (; k < restart && total < opt.max_iterations; ++k, ++total) {
            Eigen::VectorXd w = sys.apply(V.col(k));
            for (int i = 0; i <= k; ++i) {
                H(i, k) = V.col(i).dot(w);
                w -= H(i, k) * V.col(i);
            }
            H(k + 1, k) = w.norm();
            if (H(k + 1, k) > 0.0) V.col(k + 1) = w / H(k + 1, k);
            for (int i = 0; i < k; ++i) {
                const double t = cs[i] * H(i, k) + sn[i] * H(i + 1, k);
                H(i + 1, k) = -sn[i] * H(i, k) + cs[i] * H(i + 1, k);
                H(i, k) = t;
            }
            const double rho = std::hypot(H(k, k), H(k + 1, k));
            cs[k] = H(k, k) / rho;
            sn[k] = H(k + 1, k) / rho;
            H(k, k) = rho;
            H(k + 1, k) = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] = cs[k] * g[k];
            rel = std::abs(g[k + 1]) / bnorm;
            if (rel <= tol || H(k, k) == 0.0) {
                ++k;
                ++total;
                break;
            }
        }
        const Eigen::VectorXd y = H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
        x += V.leftCols(k) * y;
        if (rel <= tol) {
            const double true_rel = (b - sys.apply(x)).norm() / bnorm;
            if (true_rel <= 10.0 * tol) return {x, total, true_rel};
        }
    }
    throw IterativeFailure("GMRES did not reach relative residual " + std::to_string(tol) + " in " +
                               std::to_string(total) + " iterations",
                           total, rel);
}

}  // namespace fracfem
