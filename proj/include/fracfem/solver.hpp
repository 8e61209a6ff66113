#pragma once

#include <Eigen/Dense>

#include "fracfem/assembly.hpp"
#include "fracfem/mesh.hpp"
#include "fracfem/problem.hpp"

namespace fracfem {

struct StandardSolution {
    PwLinear u_h;

    double operator()(double x) const { return u_h(x); }
};

struct ReconSolution {
    PwLinear u_r_h;
    double mu_h;
    PowerSum u_s;
    BoundaryCondition bc;

    /// u_h = u_r_h + mu_h u_s.
    double operator()(double x) const { return u_r_h(x) + mu_h * u_s(x); }
    double regular(double x) const { return u_r_h(x); }
};

/// Dense LU with partial pivoting on the full system matrix. Throws
/// SingularSystemError when a pivot falls below 1e-14 ||K||.
Eigen::VectorXd solve_dense(AssembledSystem sys);

StandardSolution solve_standard(AssembledSystem sys);

/// Solves for the regular part, then mu_h = c0 (F1 - s . c). Systems with
/// more than 1024 unknowns keep the rank-one term out of the factorization
/// (Sherman-Morrison).
ReconSolution solve_reconstruction(AssembledSystem sys);
ReconSolution solve_reconstruction(const ProblemSpec& spec, const Mesh& mesh);

struct GmresOptions {
    int restart = 50;
    int max_iterations = 2000;
};

struct IterativeResult {
    Eigen::VectorXd x;
    int iterations;
    double residual;
};

/// Unpreconditioned restarted GMRES on the system's matvec (Toeplitz FFT
/// path on uniform meshes). Throws IterativeFailure when the relative
/// residual stays above tol.
IterativeResult solve_iterative(const AssembledSystem& sys, double tol, GmresOptions opt = {});

}  // namespace fracfem
