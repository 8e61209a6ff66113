#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fracfem/power_sum.hpp"

namespace fracfem {

struct Grading {
    enum class Kind { uniform, graded };

    Kind kind = Kind::uniform;
    double delta = 1.0;

    static Grading uniform() { return {}; }
    static Grading graded(double delta) { return {Kind::graded, delta}; }
};

/// Nodes 0 = x_0 < x_1 < ... < x_m = 1. Immutable after construction.
class Mesh {
public:
    /// Uniform: x_j = j/m. Graded: x_j = (j/m)^delta, delta >= 1; delta == 1
    /// produces exactly the uniform nodes.
    Mesh(int m, Grading grading = Grading::uniform());

    int elements() const noexcept { return m_; }
    int interior() const noexcept { return m_ - 1; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    double node(int j) const { return nodes_[j]; }
    double element_length(int e) const { return nodes_[e + 1] - nodes_[e]; }
    /// True when the nodes are equispaced (uniform grading or delta == 1).
    bool is_uniform() const noexcept { return uniform_; }
    const Grading& grading() const noexcept { return grading_; }

    /// Index e of the element [x_e, x_{e+1}] containing x. A node is assigned
    /// to the element on its left, except x = 0. Throws DomainError outside [0, 1].
    int locate(double x) const;

private:
    int m_;
    Grading grading_;
    bool uniform_;
    std::vector<double> nodes_;
};

/// Hat function of node j evaluated at x.
double hat(const Mesh& mesh, int j, double x);

/// Continuous piecewise-linear function with zero boundary values; coeffs
/// hold the m - 1 interior nodal values.
class PwLinear {
public:
    PwLinear(Mesh mesh, Eigen::VectorXd coeffs);

    double operator()(double x) const;
    const Mesh& mesh() const noexcept { return mesh_; }
    const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }
    /// Nodal value at node j, including the zero boundary values.
    double nodal(int j) const;

private:
    Mesh mesh_;
    Eigen::VectorXd coeffs_;
};

/// D0^s phi_j (side = left) or D1^s phi_j (side = right) as a PowerSum of
/// exponent 1 - s anchored at x_{j-1}, x_j, x_{j+1}.
PowerSum basis_frac_derivative(const Mesh& mesh, int j, double s, Side side);

}  // namespace fracfem
