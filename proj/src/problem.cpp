#include "fracfem/problem.hpp"

#include <cmath>

#include "fracfem/error.hpp"

namespace fracfem {

void ProblemSpec::validate() const {
    if (bc == BoundaryCondition::mixed_left_neumann && !(alpha.value() > 1.5))
        throw ArgumentError("ProblemSpec: mixed boundary conditions need alpha > 3/2");
    for (int k = 0; k < 1000; ++k) {
        const double x = (k + 0.5) / 1000.0;
        if (!std::isfinite(q(x)))
            throw ArgumentError("ProblemSpec: potential is not bounded on [0, 1]");
    }
}

PowerSum example_source(Example e) {
    switch (e) {
        case Example::a: return PowerSum{{1.0, 0.0, 1.0, Side::left}, {-1.0, 0.0, 2.0, Side::left}};
        case Example::b: return PowerSum{{1.0, 0.0, 0.0, Side::left}, {-1.0, 0.5, 0.0, Side::left}};
        case Example::c: return PowerSum::monomial(1.0, -0.25);
    }
    throw ArgumentError("example_source: unknown example");
}

double example_regularity(Example e) {
    switch (e) {
        case Example::a: return 1.0;
        case Example::b: return 0.5;
        case Example::c: return 0.25;
    }
    throw ArgumentError("example_regularity: unknown example");
}

Example parse_example(const std::string& name) {
    if (name == "a") return Example::a;
    if (name == "b") return Example::b;
    if (name == "c") return Example::c;
    throw ArgumentError("unknown example '" + name + "' (expected a, b or c)");
}

std::string to_string(Example e) {
    switch (e) {
        case Example::a: return "a";
        case Example::b: return "b";
        case Example::c: return "c";
    }
    return "?";
}

PowerSum potential_x1mx() {
    return PowerSum{{1.0, 0.0, 1.0, Side::left}, {-1.0, 0.0, 2.0, Side::left}};
}

ProblemSpec make_problem(double alpha, Example source, bool with_potential, BoundaryCondition bc) {
    const PowerSum f = example_source(source);
    ProblemSpec spec{FracOrder(alpha),
                     with_potential ? Field::from_power_sum(potential_x1mx()) : Field::zero(),
                     Field::from_power_sum(f),
                     bc,
                     f,
                     example_regularity(source)};
    spec.validate();
    return spec;
}

}  // namespace fracfem
