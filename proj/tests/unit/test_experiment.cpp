#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fracfem/error.hpp"
#include "fracfem/experiment.hpp"

using namespace fracfem;

namespace {

ExperimentConfig small(std::vector<double> alphas, int k0, int k1) {
    ExperimentConfig c;
    c.alphas = std::move(alphas);
    c.example = "a";
    c.k_min = k0;
    c.k_max = k1;
    return c;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("configuration checks") {
    ExperimentConfig c = small({1.5}, 5, 4);
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = small({1.25, 1.75}, 3, 4);
    c.method = "recon_mixed";
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = small({1.5}, 3, 10);
    c.q_kind = "x_times_1mx";
    c.reference_m = 4096;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c.k_max = 9;
    CHECK_NOTHROW(c.validate());
    c = small({}, 3, 4);
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = small({2.5}, 3, 4);
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = small({1.5}, 3, 4);
    c.example = "custom";
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    CHECK_THROWS_AS(run_experiment(small({1.5}, 6, 5)), ArgumentError);
}

TEST_CASE("levels") {
    CHECK(parse_levels("5..10") == std::pair{5, 10});
    CHECK(parse_levels("7") == std::pair{7, 7});
    CHECK_THROWS_AS(parse_levels("5-10"), ArgumentError);
    CHECK_THROWS_AS(parse_levels("a..b"), ArgumentError);
}

TEST_CASE("JSON configuration") {
    const ExperimentConfig c = config_from_json(R"({"alpha": [1.6, 1.9], "example": "c", "q": "x_times_1mx",
        "method": "recon_mixed", "levels": "4..6", "graded": 2, "reference_m": 1024, "format": "markdown",
        "parallel": false})");
    CHECK(c.alphas == std::vector<double>{1.6, 1.9});
    CHECK(c.example == "c");
    CHECK(c.q_kind == "x_times_1mx");
    CHECK(c.method == "recon_mixed");
    CHECK(c.k_min == 4);
    CHECK(c.k_max == 6);
    CHECK(c.grading.kind == Grading::Kind::graded);
    CHECK(c.grading.delta == 2.0);
    CHECK(c.reference_m == 1024);
    CHECK(c.format == OutputFormat::markdown);
    CHECK_FALSE(c.parallel);
    CHECK(config_from_json(R"({"alpha": 1.3, "levels": [2, 3]})").alphas == std::vector<double>{1.3});
    CHECK_THROWS_AS(config_from_json(R"({"alpah": 1.3})"), ArgumentError);
    CHECK_THROWS_AS(config_from_json(R"({"alpha": "x"})"), ArgumentError);
    CHECK_THROWS_AS(config_from_json("[1, 2]"), ArgumentError);
    CHECK_THROWS_AS(config_from_json("{"), ArgumentError);
}

TEST_CASE("one-row report") {
    const auto cells = run_experiment(small({1.5}, 4, 4));
    const std::string csv = emit_table(cells, OutputFormat::csv);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].present[5]);
    CHECK(rows[0].present[4]);
}

TEST_CASE("CSV round trip") {
    ExperimentConfig c = small({1.25, 1.75}, 3, 5);
    c.method = "standard";
    const auto cells = run_experiment(c);
    const auto rows = parse_csv(emit_table(cells, OutputFormat::csv));
    REQUIRE(rows.size() == 6);
    std::size_t n = 0;
    for (const auto& cell : cells) {
        REQUIRE(cell.report);
        const auto& r = *cell.report;
        const auto rl = r.rates_linf();
        for (std::size_t i = 0; i < r.rows.size(); ++i, ++n) {
            const CsvRow& row = rows[n];
            CHECK(row.alpha == r.alpha);
            CHECK(row.k == r.rows[i].k);
            CHECK(row.values[0] == r.rows[i].h);
            CHECK(row.values[1] == r.rows[i].err.l2);
            CHECK(row.values[2] == r.rows[i].err.energy);
            CHECK(row.values[3] == r.rows[i].err.linf);
            CHECK_FALSE(row.present[4]);
            if (i > 0) CHECK(row.values[7] == rl[i - 1]);
            CHECK(row.values[11] == r.expected->linf);
        }
    }
}

TEST_CASE("markdown layout") {
    const auto cells = run_experiment(small({1.25, 1.5, 1.75}, 3, 8));
    const std::string md = emit_table(cells, OutputFormat::markdown);
    int blocks = 0;
    std::istringstream in(md);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("### alpha", 0) == 0) ++blocks;
        if (line.rfind("| norm |", 0) == 0) CHECK(line == "| norm | k=3 | k=4 | k=5 | k=6 | k=7 | k=8 | rate |");
    }
    CHECK(blocks == 3);
    CHECK(md.find("| mu |") != std::string::npos);
}

TEST_CASE("a failing cell does not stop the others") {
    const double a = 1.5;
    const double moment = std::tgamma(a) / std::tgamma(2.0 * a) - 2.0 / std::tgamma(3.0 + a);
    std::ostringstream q;
    q.precision(17);
    q << -1.0 / moment;
    ExperimentConfig c = small({1.5, 1.75}, 2, 3);
    c.q_kind = "custom";
    c.q_expr = q.str();
    c.q_hint = "smooth";
    c.reference_m = 64;
    const auto cells = run_experiment(c);
    REQUIRE(cells.size() == 2);
    CHECK_FALSE(cells[0].report);
    CHECK(cells[0].error.find("1 + ") != std::string::npos);
    CHECK(cells[1].report);
    const std::string csv = emit_table(cells, OutputFormat::csv);
    CHECK(csv.find("# error: alpha=1.5: ") != std::string::npos);
    CHECK(parse_csv(csv).size() == 2);
}

TEST_CASE("custom data") {
    ExperimentConfig c = small({1.5}, 3, 4);
    c.example = "custom";
    c.f_expr = "chi(0,0.5)";
    c.f_hint = "smooth";
    c.reference_m = 256;
    const auto cells = run_experiment(c);
    REQUIRE(cells[0].report);
    CHECK(cells[0].report->rows.size() == 2);
    CHECK(cells[0].report->rows[1].err.l2 < cells[0].report->rows[0].err.l2);
}

TEST_CASE("determinism") {
    ExperimentConfig c = small({1.25, 1.75}, 3, 5);
    c.example = "b";
    const std::string first = emit_table(run_experiment(c), OutputFormat::csv);
    c.parallel = false;
    const std::string second = emit_table(run_experiment(c), OutputFormat::csv);
    CHECK(first == second);
}
