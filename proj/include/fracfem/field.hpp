#pragma once

#include <vector>

#include "fracfem/power_sum.hpp"
#include "fracfem/quadrature.hpp"

namespace fracfem {

/// smooth(x) * (x - anchor)_+^exponent; zero to the left of the anchor.
struct FieldTerm {
    ScalarFn smooth;
    double anchor = 0.0;
    double exponent = 0.0;

    double operator()(double x) const;
};

/// Scalar field on [0, 1] as a sum of hinted terms plus known breakpoints.
///
/// Each term carries the location and strength of its algebraic singularity
/// so quadrature can absorb it into a Gauss-Jacobi weight. Breakpoints mark
/// jumps in the smooth parts (e.g. an indicator function) and are honoured by
/// every integration routine. An empty term list is the zero field.
class Field {
public:
    Field() = default;

    static Field zero() { return {}; }
    static Field constant(double c);
    static Field smooth(ScalarFn fn, std::vector<double> breakpoints = {});
    /// `fn` is the full function; it behaves like x^exponent near 0.
    static Field hinted(ScalarFn fn, double exponent, std::vector<double> breakpoints = {});
    /// Left-sided PowerSums only.
    static Field from_power_sum(const PowerSum& p);

    double operator()(double x) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<FieldTerm>& terms() const noexcept { return terms_; }
    /// Sorted interior breakpoints in (0, 1), including term anchors.
    std::vector<double> breakpoints() const;
    /// Smallest singular exponent among terms anchored at 0 (0 if none).
    double left_singular_exponent() const;

    Field operator+(const Field& other) const;
    Field operator-(const Field& other) const;
    Field operator*(double scale) const;
    /// Pointwise product; exponents of terms sharing an anchor add up.
    Field operator*(const Field& other) const;

private:
    std::vector<FieldTerm> terms_;
    std::vector<double> breakpoints_;
};

inline Field operator*(double scale, const Field& f) { return f * scale; }

/// Integrates g(t) * factor(t) * (right.point - t)^right.exponent over [a, b]
/// term by term, split at breakpoints. `factor` must be smooth on [a, b]; an
/// empty factor means 1.
double integrate_field(const Field& g, double a, double b, const ScalarFn& factor,
                       EndpointWeight right, int points);

/// Same over [0, 1] with no extra factor.
double integrate_field(const Field& g, EndpointWeight right, int points);

}  // namespace fracfem
