#include <doctest.h>

#include <cmath>

#include "fracfem/analysis.hpp"
#include "fracfem/error.hpp"
#include "fracfem/solver.hpp"

using namespace fracfem;

namespace {

double mu_exact_a(double a) { return 1.0 / std::tgamma(a + 2.0) - 2.0 / std::tgamma(a + 3.0); }

}  // namespace

TEST_CASE("single-unknown system") {
    const double a = 1.5;
    const ProblemSpec spec = make_problem(a, Example::a, false);
    const AssembledSystem sys = assemble_system(spec, Mesh(2), Method::standard);
    REQUIRE(sys.size() == 1);
    const StandardSolution u = solve_standard(sys);
    CHECK(u.u_h.coeffs()[0] == doctest::Approx(sys.load[0] / sys.lead(0, 0)).epsilon(1e-14));
}

TEST_CASE("residual of the solved system") {
    for (bool potential : {false, true}) {
        const ProblemSpec spec = make_problem(1.25, Example::a, potential);
        for (const Mesh& mesh : {Mesh(64), Mesh(64, Grading::graded(2.0))}) {
            const AssembledSystem sys = assemble_system(spec, mesh, Method::reconstruction);
            const ReconSolution sol = solve_reconstruction(sys);
            const Eigen::VectorXd res = sys.matrix() * sol.u_r_h.coeffs() - sys.load;
            CHECK(res.cwiseAbs().maxCoeff() < 1e-10 * sys.load.cwiseAbs().maxCoeff());
        }
    }
}

TEST_CASE("solution is not mirror symmetric") {
    const ProblemSpec spec = make_problem(1.5, Example::a, false);
    const StandardSolution u = solve_standard(assemble_system(spec, Mesh(16), Method::standard));
    const Eigen::VectorXd c = u.u_h.coeffs();
    CHECK((c - c.reverse()).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("singularity strength without a potential") {
    for (double a : {1.25, 1.5, 1.75}) {
        const ProblemSpec spec = make_problem(a, Example::a, false);
        const double first = solve_reconstruction(spec, Mesh(8)).mu_h;
        CHECK(first == doctest::Approx(mu_exact_a(a)).epsilon(1e-14));
        for (int m : {16, 32, 64}) CHECK(solve_reconstruction(spec, Mesh(m)).mu_h == first);
    }
}

TEST_CASE("regular part equals the standard solve of the modified load") {
    const ProblemSpec spec = make_problem(1.5, Example::b, false);
    const AssembledSystem sys = assemble_system(spec, Mesh(32), Method::reconstruction);
    const ReconSolution rec = solve_reconstruction(sys);
    const StandardSolution st = solve_standard(sys);
    CHECK((rec.u_r_h.coeffs() - st.u_h.coeffs()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Sherman-Morrison path matches the full factorization") {
    const ProblemSpec spec = make_problem(1.5, Example::a, true);
    const AssembledSystem sys = assemble_system(spec, Mesh(2048), Method::reconstruction);
    REQUIRE(sys.size() > 1024);
    const Eigen::VectorXd full = solve_dense(sys);
    const ReconSolution sm = solve_reconstruction(sys);
    CHECK((sm.u_r_h.coeffs() - full).cwiseAbs().maxCoeff() < 1e-10 * full.cwiseAbs().maxCoeff());
}

TEST_CASE("singular systems are reported") {
    AssembledSystem sys = assemble_system(make_problem(1.5, Example::a, false), Mesh(4), Method::standard);
    sys.lead.setZero();
    sys.stencil.reset();
    try {
        solve_dense(sys);
        FAIL("expected SingularSystemError");
    } catch (const SingularSystemError& e) {
        CHECK(e.pivot() == 0.0);
    }
}

TEST_CASE("GMRES") {
    SUBCASE("one unknown") {
        const AssembledSystem sys = assemble_system(make_problem(1.5, Example::a, false), Mesh(2), Method::standard);
        const IterativeResult r = solve_iterative(sys, 1e-12);
        CHECK(r.iterations == 1);
    }
    SUBCASE("agrees with LU on the Toeplitz path") {
        const AssembledSystem sys = assemble_system(make_problem(1.5, Example::a, false), Mesh(256), Method::standard);
        REQUIRE(sys.toeplitz());
        const Eigen::VectorXd lu = solve_dense(sys);
        const IterativeResult r = solve_iterative(sys, 1e-10);
        CHECK(r.residual <= 1e-10);
        CHECK((r.x - lu).cwiseAbs().maxCoeff() < 1e-8 * lu.cwiseAbs().maxCoeff());
    }
    SUBCASE("rank-one correction and a graded mesh") {
        const AssembledSystem sys =
            assemble_system(make_problem(1.25, Example::c, true), Mesh(128, Grading::graded(2.0)), Method::reconstruction);
        const Eigen::VectorXd lu = solve_dense(sys);
        const IterativeResult r = solve_iterative(sys, 1e-11);
        CHECK((r.x - lu).cwiseAbs().maxCoeff() < 1e-8 * lu.cwiseAbs().maxCoeff());
    }
    SUBCASE("non-convergence") {
        const AssembledSystem sys = assemble_system(make_problem(1.5, Example::a, false), Mesh(256), Method::standard);
        GmresOptions opt;
        opt.restart = 2;
        opt.max_iterations = 4;
        try {
            solve_iterative(sys, 1e-14, opt);
            FAIL("expected IterativeFailure");
        } catch (const IterativeFailure& e) {
            CHECK(e.iterations() == 4);
            CHECK(e.residual() > 1e-14);
        }
    }
}

TEST_CASE("boundary behaviour of the composed solution") {
    SUBCASE("Dirichlet") {
        const ReconSolution u = solve_reconstruction(make_problem(1.5, Example::a, true), Mesh(32));
        CHECK(std::abs(u(0.0)) < 1e-15);
        CHECK(std::abs(u(1.0)) < 1e-15);
    }
    SUBCASE("mixed") {
        const double a = 1.75;
        const ReconSolution u =
            solve_reconstruction(make_problem(a, Example::a, true, BoundaryCondition::mixed_left_neumann), Mesh(32));
        CHECK(std::abs(u(1.0)) < 1e-15);
        double worst = 0.0;
        for (double x = 1e-8; x < 1e-2; x *= 3.0) worst = std::max(worst, std::abs(u(x) - u.mu_h * std::pow(x, a - 2.0)));
        CHECK(worst < 1.0);
    }
}

TEST_CASE("composed solution converges to the closed form") {
    const ProblemSpec spec = make_problem(1.5, Example::b, false);
    const ExactSolution ex = exact_q0(spec);
    double prev = INFINITY;
    for (int m : {8, 16, 32, 64}) {
        const ReconSolution u = solve_reconstruction(spec, Mesh(m));
        const double gap = error_norms([&](double x) { return u(x); }, ex.u, u.u_r_h.mesh().nodes(), spec.alpha).l2;
        CHECK(gap < prev);
        prev = gap;
    }
}
