#include "fracfem/field.hpp"

#include <algorithm>
#include <cmath>

#include "fracfem/error.hpp"

namespace fracfem {

double FieldTerm::operator()(double x) const {
    if (exponent == 0.0) return x < anchor ? 0.0 : smooth(x);
    const double y = x - anchor;
    if (y < 0.0) return 0.0;
    return smooth(x) * std::pow(y, exponent);
}

Field Field::constant(double c) {
    Field f;
    if (c != 0.0) f.terms_.push_back({[c](double) { return c; }, 0.0, 0.0});
    return f;
}

Field Field::smooth(ScalarFn fn, std::vector<double> breakpoints) {
    Field f;
    f.terms_.push_back({std::move(fn), 0.0, 0.0});
    f.breakpoints_ = std::move(breakpoints);
    return f;
}

Field Field::hinted(ScalarFn fn, double exponent, std::vector<double> breakpoints) {
    if (!(exponent > -1.0)) throw ArgumentError("Field::hinted: singular exponent must exceed -1");
    Field f;
    if (exponent == 0.0) {
        f.terms_.push_back({std::move(fn), 0.0, 0.0});
    } else {
        f.terms_.push_back(
            {[fn = std::move(fn), exponent](double x) { return fn(x) * std::pow(x, -exponent); },
             0.0, exponent});
    }
    f.breakpoints_ = std::move(breakpoints);
    return f;
}

Field Field::from_power_sum(const PowerSum& p) {
    if (!p.all_left()) throw UnsupportedFormError("Field::from_power_sum: right-sided term");
    Field f;
    for (const auto& t : p.terms()) {
        const double c = t.coeff;
        if (c == 0.0) continue;
        f.terms_.push_back({[c](double) { return c; }, t.anchor, t.exponent});
    }
    return f;
}

double Field::operator()(double x) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t(x);
    return sum;
}

std::vector<double> Field::breakpoints() const {
    std::vector<double> out;
    for (double b : breakpoints_)
        if (b > 0.0 && b < 1.0) out.push_back(b);
    for (const auto& t : terms_)
        if (t.anchor > 0.0 && t.anchor < 1.0) out.push_back(t.anchor);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double Field::left_singular_exponent() const {
    double e = 0.0;
    for (const auto& t : terms_)
        if (t.anchor == 0.0 && t.exponent < e) e = t.exponent;
    return e;
}

Field Field::operator+(const Field& other) const {
    Field out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    out.breakpoints_.insert(out.breakpoints_.end(), other.breakpoints_.begin(),
                            other.breakpoints_.end());
    return out;
}

Field Field::operator-(const Field& other) const { return *this + other * -1.0; }

Field Field::operator*(double scale) const {
    if (scale == 0.0) return {};
    Field out = *this;
    for (auto& t : out.terms_)
        t.smooth = [s = std::move(t.smooth), scale](double x) { return scale * s(x); };
    return out;
}

Field Field::operator*(const Field& other) const {
    Field out;
    for (const auto& u : terms_) {
        for (const auto& v : other.terms_) {
            FieldTerm t;
            if (u.anchor == v.anchor) {
                t = {[su = u.smooth, sv = v.smooth](double x) { return su(x) * sv(x); }, u.anchor,
                     u.exponent + v.exponent};
            } else {
                // Keep the singular factor with the larger anchor as the weight and
                // fold the other one (evaluated as a whole) into the smooth part.
                const FieldTerm& keep = u.anchor > v.anchor ? u : v;
                const FieldTerm& fold = u.anchor > v.anchor ? v : u;
                t = {[sk = keep.smooth, fold](double x) { return sk(x) * fold(x); }, keep.anchor,
                     keep.exponent};
                out.breakpoints_.push_back(fold.anchor);
            }
            if (!(t.exponent > -1.0))
                throw ArgumentError("Field product: resulting exponent is not integrable");
            out.terms_.push_back(std::move(t));
        }
    }
    out.breakpoints_.insert(out.breakpoints_.end(), breakpoints_.begin(), breakpoints_.end());
    out.breakpoints_.insert(out.breakpoints_.end(), other.breakpoints_.begin(),
                            other.breakpoints_.end());
    return out;
}

double integrate_field(const Field& g, double a, double b, const ScalarFn& factor,
                       EndpointWeight right, int points) {
    std::vector<double> cuts{a};
    for (double c : g.breakpoints())
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    double total = 0.0;
    for (const auto& term : g.terms()) {
        const EndpointWeight left{term.anchor, term.exponent};
        ScalarFn integrand = term.smooth;
        if (factor)
            integrand = [&term, &factor](double t) { return term.smooth(t) * factor(t); };
        for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
            const double lo = std::max(cuts[p], term.anchor), hi = cuts[p + 1];
            if (hi <= lo) continue;
            total += integrate_weighted(integrand, lo, hi, left, right, points);
        }
    }
    return total;
}

double integrate_field(const Field& g, EndpointWeight right, int points) {
    return integrate_field(g, 0.0, 1.0, {}, right, points);
}

}  // namespace fracfem
