#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracfem/analysis.hpp"
#include "fracfem/mesh.hpp"

namespace fracfem {

enum class OutputFormat { csv, markdown };

struct ExperimentConfig {
    std::vector<double> alphas{1.25, 1.5, 1.75};
    std::string example = "a";   ///< a | b | c | custom
    std::string q_kind = "zero"; ///< zero | x_times_1mx | custom
    std::string method = "recon"; ///< standard | recon | recon_mixed
    int k_min = 5;
    int k_max = 10;
    Grading grading = Grading::uniform();
    int reference_m = 4096;
    OutputFormat format = OutputFormat::csv;
    std::string f_expr, f_hint;
    std::string q_expr, q_hint;
    /// Run the alpha cells concurrently.
    bool parallel = true;

    /// Throws ArgumentError on an inconsistent configuration.
    void validate() const;
    /// True when errors are measured against a fine-mesh reference solution.
    bool needs_reference() const;
};

/// Reads a flat JSON object with keys alpha (number or array), example, q,
/// method, levels ("5..10" or [5, 10]) or k_min/k_max, graded (delta),
/// reference_m, format, f_expr, f_hint, q_expr, q_hint, parallel.
/// Unspecified keys keep the values already in `base`.
ExperimentConfig config_from_json(const std::string& text, ExperimentConfig base = {});

/// Parses "5..10" (or a single level "7").
std::pair<int, int> parse_levels(const std::string& text);

ProblemSpec make_spec(const ExperimentConfig& config, double alpha);

struct ReportCell {
    double alpha;
    std::optional<ConvergenceReport> report;
    std::string error;  ///< set when the cell failed
};

/// One cell per alpha, in configuration order. A failing cell carries its
/// error message; the others still run.
std::vector<ReportCell> run_experiment(const ExperimentConfig& config);

ConvergenceReport run_cell(const ExperimentConfig& config, double alpha);

inline constexpr const char* kCsvHeader =
    "alpha,k,h,err_l2,err_energy,err_linf,err_mu,rate_l2,rate_energy,rate_linf,rate_mu,"
    "expected_l2,expected_energy,expected_linf";

std::string emit_table(const std::vector<ReportCell>& cells, OutputFormat format);

/// One parsed CSV data line; empty cells become NaN with `present` false.
struct CsvRow {
    double alpha;
    int k;
    std::vector<double> values;  ///< h .. expected_linf, 12 entries
    std::vector<bool> present;
};

/// Parses emit_table CSV output; comment lines starting with '#' are skipped.
std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace fracfem
