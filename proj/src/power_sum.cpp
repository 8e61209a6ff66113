#include "fracfem/power_sum.hpp"

#include <cmath>
#include <string>

#include "fracfem/error.hpp"

namespace fracfem {

namespace {

void check_exponent(const PowerTerm& t) {
    if (!(t.exponent > -1.0))
        throw ArgumentError("PowerSum: exponent " + std::to_string(t.exponent) +
                            " is not integrable (must exceed -1)");
}

}  // namespace

double PowerTerm::operator()(double x) const {
    const double y = side == Side::left ? x - anchor : anchor - x;
    if (y < 0.0) return 0.0;
    if (exponent == 0.0) return coeff;
    return coeff * std::pow(y, exponent);
}

PowerSum::PowerSum(std::initializer_list<PowerTerm> terms) : terms_(terms) {
    for (const auto& t : terms_) check_exponent(t);
}

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) check_exponent(t);
}

PowerSum PowerSum::monomial(double coeff, double exponent) {
    return PowerSum{{coeff, 0.0, exponent, Side::left}};
}

double PowerSum::operator()(double x) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t(x);
    return sum;
}

bool PowerSum::all_left() const noexcept {
    for (const auto& t : terms_)
        if (t.side != Side::left) return false;
    return true;
}

bool PowerSum::all_right() const noexcept {
    for (const auto& t : terms_)
        if (t.side != Side::right) return false;
    return true;
}

PowerSum& PowerSum::add(const PowerTerm& term) {
    check_exponent(term);
    terms_.push_back(term);
    return *this;
}

PowerSum PowerSum::operator+(const PowerSum& other) const {
    PowerSum out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

PowerSum PowerSum::operator-(const PowerSum& other) const { return *this + other * -1.0; }

PowerSum PowerSum::operator*(double scale) const {
    PowerSum out = *this;
    for (auto& t : out.terms_) t.coeff *= scale;
    return out;
}

PowerSum PowerSum::mirrored() const {
    PowerSum out = *this;
    for (auto& t : out.terms_) {
        t.anchor = 1.0 - t.anchor;
        t.side = t.side == Side::left ? Side::right : Side::left;
    }
    return out;
}

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw ArgumentError("FracOrder: alpha must lie in (1, 2), got " + std::to_string(alpha));
}

}  // namespace fracfem
