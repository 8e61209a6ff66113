#include <doctest.h>

#include <cmath>

#include "fracfem/error.hpp"
#include "fracfem/quadrature.hpp"
#include "oracles.hpp"

using namespace fracfem;

namespace {

double apply_rule(const GaussRule& r, const ScalarFn& f) {
    double s = 0.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * f(r.nodes[k]);
    return s;
}

}  // namespace

TEST_CASE("Gauss-Legendre is exact up to degree 2n-1") {
    for (int n : {1, 2, 5, 8, 32}) {
        const auto& r = gauss_legendre(n);
        REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
        for (int d = 0; d <= 2 * n - 1; ++d) {
            const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
            CHECK(apply_rule(r, [d](double x) { return std::pow(x, d); }) ==
                  doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("Gauss-Jacobi moments match the Beta integral") {
    for (double a : {-0.5, -0.25, 0.0, 0.75})
        for (double b : {-0.75, 0.0, 0.5}) {
            const auto& r = gauss_jacobi(12, a, b);
            for (int d = 0; d <= 10; ++d) {
                auto weighted = [&](double x, double from_left, double to_right) {
                    return std::pow(to_right, a) * std::pow(from_left, b) * std::pow(x, d);
                };
                const double expected = oracle::integrate_ends(weighted, -1.0, 1.0);
                CHECK(apply_rule(r, [d](double x) { return std::pow(x, d); }) ==
                      doctest::Approx(expected).epsilon(1e-11).scale(1.0));
            }
        }
}

TEST_CASE("gauss_jacobi rejects non-integrable weights") {
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(gauss_legendre(0), ArgumentError);
}

TEST_CASE("weighted integration at and near a singular endpoint") {
    auto g = [](double t) { return std::cos(t); };
    SUBCASE("left weight at the interval end") {
        const double got = integrate_weighted(g, 0.0, 1.0, {0.0, -0.75}, {}, 16);
        const double want = oracle::integrate([&](double t) { return std::pow(t, -0.75) * g(t); }, 0.0, 1.0);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    SUBCASE("right weight near the interval") {
        const double got = integrate_weighted(g, 0.2, 0.5, {}, {0.5001, -0.6}, 16);
        const double want =
            oracle::integrate([&](double t) { return std::pow(0.5001 - t, -0.6) * g(t); }, 0.2, 0.5);
        CHECK(got == doctest::Approx(want).epsilon(1e-11));
    }
    SUBCASE("both weights") {
        const double got = integrate_weighted(g, 0.0, 1.0, {0.0, 0.3}, {1.0, -0.4}, 16);
        const double want = oracle::integrate_ends(
            [&](double t, double, double to_right) { return std::pow(t, 0.3) * std::pow(to_right, -0.4) * g(t); },
            0.0, 1.0);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    SUBCASE("weight point inside the interval is rejected") {
        CHECK_THROWS_AS(integrate_weighted(g, 0.0, 1.0, {0.5, -0.5}, {}, 8), ArgumentError);
    }
}

TEST_CASE("adaptive Gauss-Kronrod") {
    const double v = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 3.0, 1e-13);
    CHECK(v == doctest::Approx(0.5 * std::sqrt(M_PI) * std::erf(3.0)).epsilon(1e-13));

    const double kink = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-12);
    CHECK(kink == doctest::Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-12));

    try {
        integrate_adaptive([](double x) { return std::sin(1.0 / (x - 0.4999)); }, 0.0, 1.0, 1e-14, 20);
        FAIL("expected QuadratureFailure");
    } catch (const QuadratureFailure& e) {
        CHECK(e.residual_estimate() > 0.0);
    }
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10), QuadratureFailure);
}

TEST_CASE("rule options are validated") {
    QuadratureRule r;
    CHECK_NOTHROW(r.validate());
    r.points = 0;
    CHECK_THROWS_AS(r.validate(), ArgumentError);
    r = {};
    r.tol = -1.0;
    CHECK_THROWS_AS(r.validate(), ArgumentError);
}
