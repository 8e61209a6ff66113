#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fracfem {

/// y = T x for the n x n Toeplitz matrix with T[i][j] = stencil[(i - j) + n - 1].
/// The stencil has length 2n - 1. Uses a circulant embedding and FFT for
/// n > 64, a direct product otherwise.
Eigen::VectorXd toeplitz_matvec(const Eigen::VectorXd& stencil, const Eigen::VectorXd& x);

/// Toeplitz matrix with its circulant spectrum computed once, for repeated products.
class ToeplitzOperator {
public:
    explicit ToeplitzOperator(Eigen::VectorXd stencil);

    int size() const noexcept { return n_; }
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    const Eigen::VectorXd& stencil() const noexcept { return stencil_; }

private:
    int n_;
    int padded_;
    Eigen::VectorXd stencil_;
    std::vector<std::complex<double>> spectrum_;
};

}  // namespace fracfem
