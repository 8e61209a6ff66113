#pragma once

#include <Eigen/Dense>
#include <optional>

#include "fracfem/field.hpp"
#include "fracfem/mesh.hpp"
#include "fracfem/power_sum.hpp"
#include "fracfem/problem.hpp"

namespace fracfem {

/// Tridiagonal matrix; lower[k] = M[k+1][k], upper[k] = M[k][k+1].
struct Tridiagonal {
    Eigen::VectorXd lower, diag, upper;

    static Tridiagonal zero(int n);
    int size() const { return static_cast<int>(diag.size()); }
    bool is_zero() const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    void add_to(Eigen::MatrixXd& m) const;
    Eigen::MatrixXd dense() const;
};

/// Stencil of the leading stiffness on a uniform mesh with m elements:
/// entry (i - j) + (m - 2) holds A[i][j]. Length 2m - 3.
Eigen::VectorXd lead_stencil(int m, FracOrder alpha);

/// A[i][j] = -(D0^(alpha/2) phi_j, D1^(alpha/2) phi_i), dense, size m - 1.
Eigen::MatrixXd assemble_lead(const Mesh& mesh, FracOrder alpha);

/// M[i][j] = (q phi_j, phi_i).
Tridiagonal assemble_mass_q(const Mesh& mesh, const Field& q);

/// (g, phi_i) for every interior node.
Eigen::VectorXd load_vector(const Mesh& mesh, const Field& g);

/// s_j = (0I^alpha (q phi_j))(1) for every interior node.
Eigen::VectorXd endpoint_moments(const Mesh& mesh, const Field& q, FracOrder alpha);

struct SingularPair {
    PowerSum u_s;       ///< x^(alpha-1) - x^2, or x^(alpha-2) - x^2 for mixed conditions
    PowerSum c1;        ///< -2/Gamma(3-alpha) x^(2-alpha)
    double denominator; ///< 1 + (0I^alpha (q u_s))(1)
    double c0;
    double f_moment;    ///< (0I^alpha f)(1)
    Field Q;
    Field f_tilde;
    BoundaryCondition bc = BoundaryCondition::dirichlet;
};

SingularPair build_singular_pair(const ProblemSpec& spec);

enum class Method { standard, reconstruction };

struct AssembledSystem {
    Method method;
    Mesh mesh;
    FracOrder alpha;
    Eigen::MatrixXd lead;
    std::optional<Eigen::VectorXd> stencil;  ///< set when lead is Toeplitz
    Tridiagonal mass;
    Eigen::VectorXd r;  ///< empty for the standard method
    Eigen::VectorXd s;
    Eigen::VectorXd load;
    std::optional<SingularPair> pair;

    int size() const { return mesh.interior(); }
    bool toeplitz() const { return stencil.has_value(); }
    bool has_rank_one() const;
    /// lead + mass + r s^T.
    Eigen::MatrixXd matrix() const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

AssembledSystem assemble_system(const ProblemSpec& spec, const Mesh& mesh, Method method);

}  // namespace fracfem
