#pragma once

#include <initializer_list>
#include <vector>

namespace fracfem {

enum class Side { left, right };

/// One shifted power c * (x - a)_+^p (left) or c * (a - x)_+^p (right).
struct PowerTerm {
    double coeff = 0.0;
    double anchor = 0.0;
    double exponent = 0.0;
    Side side = Side::left;

    double operator()(double x) const;
};

/// Finite sum of shifted powers.
///
/// This is the single representation used for every singular function in
/// the library: fractional derivatives of hat functions, the singular
/// profiles x^(alpha-1) and x^(alpha-2), the x^2 companion, and the
/// closed-form catalog sources. Exponents must exceed -1 so that every term
/// is integrable. A term contributes 0 outside its support; at the anchor it
/// evaluates to coeff * 0^p (1 for p == 0, +inf for p < 0).
class PowerSum {
public:
    PowerSum() = default;
    PowerSum(std::initializer_list<PowerTerm> terms);
    explicit PowerSum(std::vector<PowerTerm> terms);

    /// coeff * x^exponent, anchored at 0.
    static PowerSum monomial(double coeff, double exponent);

    double operator()(double x) const;

    const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    bool all_left() const noexcept;
    bool all_right() const noexcept;

    PowerSum& add(const PowerTerm& term);
    PowerSum operator+(const PowerSum& other) const;
    PowerSum operator-(const PowerSum& other) const;
    PowerSum operator*(double scale) const;

    /// Mirror x -> 1 - x: left terms anchored at a become right terms anchored at 1 - a.
    PowerSum mirrored() const;

private:
    std::vector<PowerTerm> terms_;
};

inline PowerSum operator*(double scale, const PowerSum& p) { return p * scale; }

/// Order of the leading fractional derivative, 1 < alpha < 2.
class FracOrder {
public:
    explicit FracOrder(double alpha);

    double value() const noexcept { return alpha_; }
    /// s = alpha / 2, the order of each factor in the bilinear form.
    double half() const noexcept { return 0.5 * alpha_; }

private:
    double alpha_;
};

}  // namespace fracfem
