#include "fracfem/experiment.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>

#include "fracfem/error.hpp"
#include "fracfem/expression.hpp"

namespace fracfem {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kSampleM = 4096;
constexpr int kEnergyRefinement = 32;

// Shortest text that reads back to the same double.
std::string fmt_full(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

Method method_of(const ExperimentConfig& c) {
    return c.method == "standard" ? Method::standard : Method::reconstruction;
}

bool is_graded(const Grading& g) { return g.kind == Grading::Kind::graded && g.delta != 1.0; }

double mean_finite(const std::vector<double>& v) {
    double sum = 0.0;
    int n = 0;
    for (double x : v)
        if (std::isfinite(x)) {
            sum += x;
            ++n;
        }
    return n ? sum / n : kNaN;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (alphas.empty()) throw ArgumentError("config: alpha list is empty");
    for (double a : alphas) {
        FracOrder check(a);
        if (method == "recon_mixed" && !(a > 1.5))
            throw ArgumentError("config: recon_mixed needs every alpha > 3/2, got " + fmt_short(a));
    }
    if (example != "a" && example != "b" && example != "c" && example != "custom")
        throw ArgumentError("config: example must be a, b, c or custom");
    if (q_kind != "zero" && q_kind != "x_times_1mx" && q_kind != "custom")
        throw ArgumentError("config: q must be zero, x_times_1mx or custom");
    if (method != "standard" && method != "recon" && method != "recon_mixed")
        throw ArgumentError("config: method must be standard, recon or recon_mixed");
    if (example == "custom" && (f_expr.empty() || f_hint.empty()))
        throw ArgumentError("config: a custom source needs f_expr and f_hint");
    if (q_kind == "custom" && (q_expr.empty() || q_hint.empty()))
        throw ArgumentError("config: a custom potential needs q_expr and q_hint");
    if (k_min < 1 || k_max < k_min || k_max > 20) throw ArgumentError("config: empty or invalid level range");
    if (grading.kind == Grading::Kind::graded && !(grading.delta >= 1.0))
        throw ArgumentError("config: grading exponent must be >= 1");
    if (reference_m < 2) throw ArgumentError("config: reference_m must be >= 2");
    if (needs_reference() && (1LL << (k_max + 3)) > reference_m)
        throw ArgumentError("config: k_max must not exceed log2(reference_m) - 3");
}

bool ExperimentConfig::needs_reference() const { return q_kind != "zero" || example == "custom"; }

std::pair<int, int> parse_levels(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            const int k = std::stoi(text, &used);
            if (used != text.size()) throw ArgumentError("");
            return {k, k};
        }
        std::size_t u1 = 0, u2 = 0;
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &u1), b = std::stoi(hi, &u2);
        if (u1 != lo.size() || u2 != hi.size()) throw ArgumentError("");
        return {a, b};
    } catch (const std::exception&) {
        throw ArgumentError("levels must look like '5..10', got '" + text + "'");
    }
}

ExperimentConfig config_from_json(const std::string& text, ExperimentConfig base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ArgumentError("config: expected a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "alpha") {
                base.alphas.clear();
                if (value.is_array())
                    for (const auto& a : value) base.alphas.push_back(a.get<double>());
                else
                    base.alphas.push_back(value.get<double>());
            } else if (key == "example") {
                base.example = value.get<std::string>();
            } else if (key == "q") {
                base.q_kind = value.get<std::string>();
            } else if (key == "method") {
                base.method = value.get<std::string>();
            } else if (key == "levels") {
                if (value.is_array() && value.size() == 2) {
                    base.k_min = value[0].get<int>();
                    base.k_max = value[1].get<int>();
                } else {
                    std::tie(base.k_min, base.k_max) = parse_levels(value.get<std::string>());
                }
            } else if (key == "k_min") {
                base.k_min = value.get<int>();
            } else if (key == "k_max") {
                base.k_max = value.get<int>();
            } else if (key == "graded") {
                const double d = value.get<double>();
                base.grading = d == 1.0 ? Grading::uniform() : Grading::graded(d);
            } else if (key == "reference_m") {
                base.reference_m = value.get<int>();
            } else if (key == "format") {
                const auto f = value.get<std::string>();
                if (f != "csv" && f != "markdown") throw ArgumentError("config: format must be csv or markdown");
                base.format = f == "csv" ? OutputFormat::csv : OutputFormat::markdown;
            } else if (key == "f_expr") {
                base.f_expr = value.get<std::string>();
            } else if (key == "f_hint") {
                base.f_hint = value.is_number() ? fmt_full(value.get<double>()) : value.get<std::string>();
            } else if (key == "q_expr") {
                base.q_expr = value.get<std::string>();
            } else if (key == "q_hint") {
                base.q_hint = value.is_number() ? fmt_full(value.get<double>()) : value.get<std::string>();
            } else if (key == "parallel") {
                base.parallel = value.get<bool>();
            } else {
                throw ArgumentError("config: unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config: wrong value type: ") + e.what());
    }
    return base;
}

ProblemSpec make_spec(const ExperimentConfig& config, double alpha) {
    const BoundaryCondition bc =
        config.method == "recon_mixed" ? BoundaryCondition::mixed_left_neumann : BoundaryCondition::dirichlet;
    Field q;
    if (config.q_kind == "x_times_1mx") q = Field::from_power_sum(potential_x1mx());
    if (config.q_kind == "custom") q = field_from_expression(config.q_expr, config.q_hint);

    if (config.example != "custom") {
        const Example ex = parse_example(config.example);
        const PowerSum f = example_source(ex);
        ProblemSpec spec{FracOrder(alpha), q, Field::from_power_sum(f), bc, f, example_regularity(ex)};
        spec.validate();
        return spec;
    }
    Field f = field_from_expression(config.f_expr, config.f_hint);
    double gamma = 1.0;
    if (config.f_hint != "smooth") gamma = std::min(gamma, std::stod(config.f_hint) + 0.5);
    if (!f.breakpoints().empty()) gamma = std::min(gamma, 0.5);
    ProblemSpec spec{FracOrder(alpha), q, std::move(f), bc, std::nullopt, gamma};
    spec.validate();
    return spec;
}

ConvergenceReport run_cell(const ExperimentConfig& config, double alpha) {
    const ProblemSpec spec = make_spec(config, alpha);
    const Method method = method_of(config);
    const ExactSolution exact =
        config.needs_reference() ? reference_solution(spec, config.reference_m) : exact_q0(spec);

    ConvergenceReport report{alpha, method, {},
                             expected_rates(method, spec.bc, alpha, spec.data_regularity,
                                            is_graded(config.grading))};
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const int m = 1 << k;
        const Mesh mesh(m, config.grading);
        NormOptions opt;
        opt.sample_m = kSampleM;
        opt.energy_m = exact.fine_m > 0 ? exact.fine_m : std::max(config.reference_m, kEnergyRefinement * m);
        ConvergenceRow row{k, 1.0 / m, {}, kNaN};
        if (method == Method::standard) {
            const StandardSolution sol = solve_standard(assemble_system(spec, mesh, method));
            row.err = error_norms(sol, exact, spec.alpha, opt);
        } else {
            const ReconSolution sol = solve_reconstruction(spec, mesh);
            row.err = error_norms(sol, exact, ErrorField::regular_part, spec.alpha, opt);
            row.err_mu = std::abs(exact.mu - sol.mu_h);
        }
        report.rows.push_back(row);
    }
    return report;
}

std::vector<ReportCell> run_experiment(const ExperimentConfig& config) {
    config.validate();
    auto run = [&config](double alpha) {
        ReportCell cell{alpha, std::nullopt, {}};
        try {
            cell.report = run_cell(config, alpha);
        } catch (const std::exception& e) {
            cell.error = e.what();
            if (cell.error.empty()) cell.error = "unknown error";
        }
        return cell;
    };
    std::vector<ReportCell> cells;
    if (config.parallel && config.alphas.size() > 1) {
        std::vector<std::future<ReportCell>> futures;
        for (double a : config.alphas) futures.push_back(std::async(std::launch::async, run, a));
        for (auto& f : futures) cells.push_back(f.get());
    } else {
        for (double a : config.alphas) cells.push_back(run(a));
    }
    return cells;
}

std::string emit_table(const std::vector<ReportCell>& cells, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << kCsvHeader << '\n';
        for (const auto& cell : cells) {
            if (!cell.report) {
                std::string msg = cell.error;
                for (char& c : msg)
                    if (c == '\n') c = ' ';
                out << "# error: alpha=" << fmt_full(cell.alpha) << ": " << msg << '\n';
                continue;
            }
            const ConvergenceReport& r = *cell.report;
            const auto rl2 = r.rates_l2(), ren = r.rates_energy(), rli = r.rates_linf(), rmu = r.rates_mu();
            const bool has_mu = r.method == Method::reconstruction;
            for (std::size_t i = 0; i < r.rows.size(); ++i) {
                const auto& row = r.rows[i];
                auto rate = [&](const std::vector<double>& v) { return i == 0 ? std::string() : fmt_full(v[i - 1]); };
                out << fmt_full(r.alpha) << ',' << row.k << ',' << fmt_full(row.h) << ','
                    << fmt_full(row.err.l2) << ',' << fmt_full(row.err.energy) << ','
                    << fmt_full(row.err.linf) << ',' << (has_mu ? fmt_full(row.err_mu) : "") << ','
                    << rate(rl2) << ',' << rate(ren) << ',' << rate(rli) << ','
                    << (has_mu ? rate(rmu) : "") << ',';
                if (r.expected)
                    out << fmt_full(r.expected->l2) << ',' << fmt_full(r.expected->energy) << ','
                        << fmt_full(r.expected->linf);
                else
                    out << ",,";
                out << '\n';
            }
        }
        return out.str();
    }

    for (const auto& cell : cells) {
        out << "### alpha = " << fmt_full(cell.alpha) << "\n\n";
        if (!cell.report) {
            out << "> error: " << cell.error << "\n\n";
            continue;
        }
        const ConvergenceReport& r = *cell.report;
        out << "| norm |";
        for (const auto& row : r.rows) out << " k=" << row.k << " |";
        out << " rate |\n|---|";
        for (std::size_t i = 0; i < r.rows.size(); ++i) out << "---|";
        out << "---|\n";
        auto line = [&](const char* name, auto get, const std::vector<double>& rates, std::optional<double> expected) {
            out << "| " << name << " |";
            for (const auto& row : r.rows) out << ' ' << fmt_short(get(row)) << " |";
            char buf[64];
            std::snprintf(buf, sizeof buf, " ~ %.2f", mean_finite(rates));
            out << buf;
            if (expected) {
                std::snprintf(buf, sizeof buf, " (%.2f)", *expected);
                out << buf;
            }
            out << " |\n";
        };
        auto exp_of = [&](double ExpectedRates::*f) -> std::optional<double> {
            if (!r.expected) return std::nullopt;
            return (*r.expected).*f;
        };
        line("L2", [](const ConvergenceRow& w) { return w.err.l2; }, r.rates_l2(), exp_of(&ExpectedRates::l2));
        line("energy", [](const ConvergenceRow& w) { return w.err.energy; }, r.rates_energy(),
             exp_of(&ExpectedRates::energy));
        line("Linf", [](const ConvergenceRow& w) { return w.err.linf; }, r.rates_linf(), exp_of(&ExpectedRates::linf));
        if (r.method == Method::reconstruction)
            line("mu", [](const ConvergenceRow& w) { return w.err_mu; }, r.rates_mu(), std::nullopt);
        out << '\n';
    }
    return out.str();
}

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kCsvHeader) throw ArgumentError("parse_csv: unexpected header");
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 14) throw ArgumentError("parse_csv: expected 14 fields in '" + line + "'");
        CsvRow row{std::stod(fields[0]), std::stoi(fields[1]), {}, {}};
        for (std::size_t i = 2; i < fields.size(); ++i) {
            const bool present = !fields[i].empty();
            row.present.push_back(present);
            row.values.push_back(present ? std::strtod(fields[i].c_str(), nullptr) : kNaN);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fracfem
