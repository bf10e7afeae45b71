#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fluxatom {

struct ReportRow {
    std::string label;
    double value = 0.0;
    std::string unit; // never empty
};

enum class RatioRule { paper_over_reference, reference_over_paper };

/// Side-by-side model-vs-baseline pair. The ratio is a derived column: it is
/// recomputed from the two sides according to `rule` and must reproduce
/// bit-for-bit when a serialized report is parsed back.
struct ReportComparison {
    std::string label;
    double paper = 0.0;     // model prediction
    double reference = 0.0; // baseline (standard formula or experiment)
    std::optional<double> ratio;
    RatioRule rule = RatioRule::paper_over_reference;
};

struct ReportDiagnostic {
    std::string label;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false; // derived: residual <= tolerance
};

/// Machine-readable command output: echo of the command and its inputs,
/// labeled numeric rows (each with a unit), comparisons and oracle
/// residuals. Assembly is single-ordered, so equal inputs give equal output.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ReportRow> rows;
    std::vector<ReportComparison> comparisons;
    std::vector<ReportDiagnostic> diagnostics;

    void add_input(std::string key, std::string value);
    /// Throws std::invalid_argument on an empty unit.
    void add_row(std::string label, double value, std::string unit);
    /// Sets the ratio only when both sides are finite and the denominator
    /// is nonzero.
    void add_comparison(std::string label, double paper, double reference,
                        RatioRule rule = RatioRule::paper_over_reference);
    void add_diagnostic(std::string label, double residual, double tolerance);

    bool all_pass() const;

    std::string to_table(int digits = 10) const;
    std::string to_csv(int digits = 10) const;
    /// Full-precision JSON; parse_json(to_json()) is lossless.
    std::string to_json() const;
    static Report parse_json(const std::string& text);
};

enum class ReportFormat { table, csv, json };

ReportFormat parse_report_format(const std::string& name);

std::string render_report(const Report& report, ReportFormat format, int digits);

} // namespace fluxatom
