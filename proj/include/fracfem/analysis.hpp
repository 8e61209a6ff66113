#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fracfem/assembly.hpp"
#include "fracfem/problem.hpp"
#include "fracfem/quadrature.hpp"
#include "fracfem/solver.hpp"

namespace fracfem {

/// Exact or reference solution: evaluators for u and its regular part, and mu.
struct ExactSolution {
    enum class Kind { closed_form, reference };

    Kind kind;
    ScalarFn u;
    ScalarFn u_r;
    double mu;
    /// Elements of the reference mesh (0 for closed forms).
    int fine_m = 0;
    std::shared_ptr<const ReconSolution> reference;
};

/// Closed-form solution for q = 0 and a source with a PowerSum closed form:
/// u = -0I^alpha f + mu u_s-profile, u_r = -0I^alpha f + mu x^2, mu = (0I^alpha f)(1).
/// Throws UnsupportedSourceError otherwise.
ExactSolution exact_q0(const ProblemSpec& spec);

/// Reconstruction solution on a uniform mesh with fine_m elements.
ExactSolution reference_solution(const ProblemSpec& spec, int fine_m = 4096);

enum class ErrorField { full_u, regular_part };

struct ErrorNorms {
    double l2;
    double energy;
    double linf;
};

struct NormOptions {
    /// Uniform sampling grid merged with the approximation nodes.
    int sample_m = 4096;
    /// Uniform mesh on which the error is interpolated for the energy norm.
    int energy_m = 4096;
    int points = 8;
};

/// L2 by composite Gauss-Legendre on the merged grid, L-infinity as the max
/// over interior nodes and Gauss points, energy as sqrt(d^T A d) with d the
/// error at the interior nodes of the energy mesh and A its leading stiffness.
ErrorNorms error_norms(const ScalarFn& approx, const ScalarFn& exact,
                       const std::vector<double>& approx_nodes, FracOrder alpha,
                       const NormOptions& opt = {});
ErrorNorms error_norms(const ReconSolution& approx, const ExactSolution& exact, ErrorField which,
                       FracOrder alpha, const NormOptions& opt = {});
ErrorNorms error_norms(const StandardSolution& approx, const ExactSolution& exact, FracOrder alpha,
                       const NormOptions& opt = {});

/// log2(e_k / e_{k+1}); NaN where either error is zero.
std::vector<double> convergence_rates(const std::vector<double>& errors);

/// Green's function of -D0^alpha with homogeneous Dirichlet conditions.
double green_q0(FracOrder alpha, double x, double y);

struct ExpectedRates {
    double l2;
    double energy;
    double linf;
};

/// Predicted rates; `gamma` is the regularity index of the data. Nothing is
/// predicted for the standard method on graded meshes.
std::optional<ExpectedRates> expected_rates(Method method, BoundaryCondition bc, double alpha,
                                            double gamma, bool graded);

struct ConvergenceRow {
    int k;
    double h;
    ErrorNorms err;
    /// |mu - mu_h|; NaN for the standard method.
    double err_mu;
};

struct ConvergenceReport {
    double alpha;
    Method method;
    std::vector<ConvergenceRow> rows;
    std::optional<ExpectedRates> expected;

    std::vector<double> rates_l2() const;
    std::vector<double> rates_energy() const;
    std::vector<double> rates_linf() const;
    std::vector<double> rates_mu() const;
};

}  // namespace fracfem
