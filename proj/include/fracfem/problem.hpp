#pragma once

#include <optional>
#include <string>

#include "fracfem/field.hpp"
#include "fracfem/power_sum.hpp"

namespace fracfem {

enum class BoundaryCondition { dirichlet, mixed_left_neumann };

/// -D0^alpha u + q u = f on (0, 1) with u(0) = u(1) = 0 (dirichlet) or
/// D0^(alpha-1) u(0) = 0, u(1) = 0 (mixed_left_neumann).
struct ProblemSpec {
    FracOrder alpha;
    Field q;
    Field f;
    BoundaryCondition bc = BoundaryCondition::dirichlet;
    /// Closed form of f, when known; enables exact solutions for q = 0.
    std::optional<PowerSum> f_power;
    /// Sobolev-type regularity index of the data, used only for predicted rates.
    double data_regularity = 1.0;

    /// Throws ArgumentError for mixed conditions with alpha <= 3/2 or an
    /// unbounded potential (checked on 1000 sample points).
    void validate() const;
};

enum class Example { a, b, c };

/// (a) x(1 - x), (b) indicator of [0, 1/2], (c) x^(-1/4).
PowerSum example_source(Example e);
double example_regularity(Example e);
Example parse_example(const std::string& name);
std::string to_string(Example e);

/// q(x) = x(1 - x).
PowerSum potential_x1mx();

ProblemSpec make_problem(double alpha, Example source, bool with_potential,
                         BoundaryCondition bc = BoundaryCondition::dirichlet);

}  // namespace fracfem
