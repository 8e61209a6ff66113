#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracfem/error.hpp"
#include "fracfem/expression.hpp"

using namespace fracfem;

TEST_CASE("arithmetic and precedence") {
    CHECK(parse_expression("x*(1-x)").fn(0.25) == doctest::Approx(0.1875));
    CHECK(parse_expression("1 + 2 * 3").fn(0.0) == 7.0);
    CHECK(parse_expression("2^3^2").fn(0.0) == 512.0);
    CHECK(parse_expression("-x^2").fn(3.0) == -9.0);
    CHECK(parse_expression("x^-0.25").fn(16.0) == doctest::Approx(0.5));
    CHECK(parse_expression("8 / 4 / 2").fn(0.0) == 1.0);
    CHECK(parse_expression("2*pi").fn(0.0) == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(parse_expression("e^x").fn(1.0) == doctest::Approx(std::numbers::e));
    CHECK(parse_expression("1e-3*x").fn(2.0) == doctest::Approx(2e-3));
}

TEST_CASE("indicator") {
    const Expression chi = parse_expression("chi(0, 0.5)");
    CHECK(chi.fn(0.0) == 1.0);
    CHECK(chi.fn(0.49) == 1.0);
    CHECK(chi.fn(0.5) == 0.0);
    CHECK(chi.breakpoints == std::vector<double>{0.0, 0.5});
    CHECK(parse_expression("3*chi(-1,0.25) + x").fn(0.1) == doctest::Approx(3.1));
}

TEST_CASE("malformed input") {
    for (const char* bad : {"", "x +", "(x", "x)", "sin(x)", "chi(0.5, 0.2)", "2 x", "chi(0,)"})
        CHECK_THROWS_AS(parse_expression(bad), ArgumentError);
}

TEST_CASE("fields from expressions") {
    const Field f = field_from_expression("x^-0.25", "-0.25");
    CHECK(f.left_singular_exponent() == doctest::Approx(-0.25));
    CHECK(f(0.0625) == doctest::Approx(2.0));
    const Field s = field_from_expression("chi(0,0.5)", "smooth");
    CHECK(s.breakpoints() == std::vector<double>{0.5});
    CHECK_THROWS_AS(field_from_expression("x", ""), ArgumentError);
    CHECK_THROWS_AS(field_from_expression("x", "rough"), ArgumentError);
    CHECK_THROWS_AS(field_from_expression("x", "-1.5"), ArgumentError);
}
