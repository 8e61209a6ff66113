#include "fracfem/toeplitz.hpp"

#include <string>
#include <unsupported/Eigen/FFT>

#include "fracfem/error.hpp"

namespace fracfem {

namespace {

constexpr int kDirectLimit = 64;

int stencil_order(const Eigen::VectorXd& stencil) {
    const auto len = stencil.size();
    if (len < 1 || len % 2 == 0)
        throw ArgumentError("Toeplitz stencil must have odd length 2n - 1, got " + std::to_string(len));
    return static_cast<int>((len + 1) / 2);
}

Eigen::VectorXd direct_product(const Eigen::VectorXd& t, const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += t[i - j + n - 1] * x[j];
    return y;
}

}  // namespace

ToeplitzOperator::ToeplitzOperator(Eigen::VectorXd stencil)
    : n_(stencil_order(stencil)), padded_(1), stencil_(std::move(stencil)) {
    if (n_ <= kDirectLimit) return;
    while (padded_ < 2 * n_) padded_ *= 2;
    // First column of the circulant: T[k][0] for k >= 0, then T[0][k] wrapped.
    std::vector<double> column(padded_, 0.0);
    for (int k = 0; k < n_; ++k) column[k] = stencil_[k + n_ - 1];
    for (int k = 1; k < n_; ++k) column[padded_ - k] = stencil_[n_ - 1 - k];
    Eigen::FFT<double> fft;
    fft.fwd(spectrum_, column);
}

Eigen::VectorXd ToeplitzOperator::apply(const Eigen::VectorXd& x) const {
    if (x.size() != n_)
        throw ArgumentError("ToeplitzOperator: vector length " + std::to_string(x.size()) +
                            " does not match order " + std::to_string(n_));
    if (n_ <= kDirectLimit) return direct_product(stencil_, x);
    std::vector<double> padded(padded_, 0.0);
    for (int k = 0; k < n_; ++k) padded[k] = x[k];
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> freq;
    fft.fwd(freq, padded);
    for (int k = 0; k < padded_; ++k) freq[k] *= spectrum_[k];
    std::vector<double> out;
    fft.inv(out, freq);
    Eigen::VectorXd y(n_);
    for (int k = 0; k < n_; ++k) y[k] = out[k];
    return y;
}

Eigen::VectorXd toeplitz_matvec(const Eigen::VectorXd& stencil, const Eigen::VectorXd& x) {
    const int n = stencil_order(stencil);
    if (x.size() != n)
        throw ArgumentError("toeplitz_matvec: stencil length " + std::to_string(stencil.size()) +
                            " does not match vector length " + std::to_string(x.size()));
    if (n <= kDirectLimit) return direct_product(stencil, x);
    return ToeplitzOperator(stencil).apply(x);
}

}  // namespace fracfem
