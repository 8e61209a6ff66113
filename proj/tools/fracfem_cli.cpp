#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fracfem/error.hpp"
#include "fracfem/experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fracfem::ArgumentError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convergence studies for fractional boundary value problems"};

    std::string config_path, levels, format, out_path;
    std::vector<double> alphas;
    std::string example, q_kind, method, f_expr, f_hint, q_expr, q_hint;
    double delta = 1.0;
    int reference_m = 0;
    bool serial = false;

    app.add_option("--config", config_path, "Flat JSON file with the experiment settings")->check(CLI::ExistingFile);
    auto* o_alpha = app.add_option("--alpha", alphas, "Fractional orders, e.g. --alpha 1.25 1.5 1.75");
    auto* o_example = app.add_option("--example", example, "Source: a, b, c or custom");
    auto* o_q = app.add_option("--q", q_kind, "Potential: zero, x_times_1mx or custom");
    auto* o_method = app.add_option("--method", method, "standard, recon or recon_mixed");
    auto* o_levels = app.add_option("--levels", levels, "Mesh levels k (h = 2^-k), e.g. 5..10");
    auto* o_graded = app.add_option("--graded", delta, "Graded mesh x_j = (j/m)^delta");
    auto* o_ref = app.add_option("--reference-m", reference_m, "Elements of the reference mesh");
    auto* o_format = app.add_option("--format", format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));
    app.add_option("--out", out_path, "Write the table here instead of stdout");
    auto* o_fexpr = app.add_option("--f-expr", f_expr, "Custom source expression in x");
    auto* o_fhint = app.add_option("--f-hint", f_hint, "Source behaviour at 0: smooth or exponent p of x^p");
    auto* o_qexpr = app.add_option("--q-expr", q_expr, "Custom potential expression in x");
    auto* o_qhint = app.add_option("--q-hint", q_hint, "Potential behaviour at 0: smooth or exponent");
    auto* o_serial = app.add_flag("--serial", serial, "Run the alpha cells one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    fracfem::ExperimentConfig config;
    std::vector<fracfem::ReportCell> cells;
    try {
        if (!config_path.empty()) config = fracfem::config_from_json(read_file(config_path));
        if (o_alpha->count()) config.alphas = alphas;
        if (o_example->count()) config.example = example;
        if (o_q->count()) config.q_kind = q_kind;
        if (o_method->count()) config.method = method;
        if (o_levels->count()) std::tie(config.k_min, config.k_max) = fracfem::parse_levels(levels);
        if (o_graded->count())
            config.grading = delta == 1.0 ? fracfem::Grading::uniform() : fracfem::Grading::graded(delta);
        if (o_ref->count()) config.reference_m = reference_m;
        if (o_format->count())
            config.format = format == "csv" ? fracfem::OutputFormat::csv : fracfem::OutputFormat::markdown;
        if (o_fexpr->count()) config.f_expr = f_expr;
        if (o_fhint->count()) config.f_hint = f_hint;
        if (o_qexpr->count()) config.q_expr = q_expr;
        if (o_qhint->count()) config.q_hint = q_hint;
        if (o_serial->count()) config.parallel = false;
        config.validate();
        cells = fracfem::run_experiment(config);
    } catch (const fracfem::Error& e) {
        std::cerr << "fracfem: " << e.what() << '\n';
        return 1;
    }

    const std::string table = fracfem::emit_table(cells, config.format);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "fracfem: cannot write '" << out_path << "'\n";
            return 1;
        }
        out << table;
    }
    bool failed = false;
    for (const auto& c : cells)
        if (!c.report) {
            failed = true;
            std::cerr << "fracfem: alpha=" << c.alpha << ": " << c.error << '\n';
        }
    return failed ? 2 : 0;
}
