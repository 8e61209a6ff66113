#include "fracfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracfem/error.hpp"
#include "fracfem/special.hpp"

namespace fracfem {

Mesh::Mesh(int m, Grading grading) : m_(m), grading_(grading) {
    if (m < 2) throw ArgumentError("Mesh: need at least 2 elements, got " + std::to_string(m));
    if (grading.kind == Grading::Kind::graded && !(grading.delta >= 1.0))
        throw ArgumentError("Mesh: grading exponent must be >= 1");
    uniform_ = grading.kind == Grading::Kind::uniform || grading.delta == 1.0;
    nodes_.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double t = static_cast<double>(j) / m;
        nodes_[j] = uniform_ ? t : std::pow(t, grading.delta);
    }
    nodes_[m] = 1.0;
}

int Mesh::locate(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("Mesh::locate: x outside [0, 1]");
    if (x == 0.0) return 0;
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    return static_cast<int>(it - nodes_.begin()) - 1;
}

double hat(const Mesh& mesh, int j, double x) {
    const auto& n = mesh.nodes();
    if (j > 0 && x >= n[j - 1] && x <= n[j]) return (x - n[j - 1]) / (n[j] - n[j - 1]);
    if (j < mesh.elements() && x > n[j] && x <= n[j + 1]) return (n[j + 1] - x) / (n[j + 1] - n[j]);
    return 0.0;
}

PwLinear::PwLinear(Mesh mesh, Eigen::VectorXd coeffs) : mesh_(std::move(mesh)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != mesh_.interior())
        throw ArgumentError("PwLinear: expected " + std::to_string(mesh_.interior()) +
                            " coefficients, got " + std::to_string(coeffs_.size()));
}

double PwLinear::nodal(int j) const {
    if (j <= 0 || j >= mesh_.elements()) return 0.0;
    return coeffs_[j - 1];
}

double PwLinear::operator()(double x) const {
    const int e = mesh_.locate(x);
    const double a = mesh_.node(e), b = mesh_.node(e + 1);
    if (x == a) return nodal(e);
    if (x == b) return nodal(e + 1);
    const double t = (x - a) / (b - a);
    return (1.0 - t) * nodal(e) + t * nodal(e + 1);
}

PowerSum basis_frac_derivative(const Mesh& mesh, int j, double s, Side side) {
    if (j <= 0 || j >= mesh.elements())
        throw ArgumentError("basis_frac_derivative: index " + std::to_string(j) + " is not interior");
    if (!(s > 0.0 && s < 1.0)) throw ArgumentError("basis_frac_derivative: s must lie in (0, 1)");
    const double hl = mesh.element_length(j - 1), hr = mesh.element_length(j);
    const double scale = rgamma_fn(2.0 - s);
    const double p = 1.0 - s;
    // Jumps of phi_j' at x_{j-1}, x_j, x_{j+1}; the same weights serve both sides.
    return PowerSum{{scale / hl, mesh.node(j - 1), p, side},
                    {-scale * (1.0 / hl + 1.0 / hr), mesh.node(j), p, side},
                    {scale / hr, mesh.node(j + 1), p, side}};
}

}  // namespace fracfem
