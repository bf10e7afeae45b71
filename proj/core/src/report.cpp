#include "fluxatom/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fluxatom {

namespace {

std::string format_number(double v, int digits) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* rule_name(RatioRule rule) {
    return rule == RatioRule::paper_over_reference ? "paper/reference" : "reference/paper";
}

RatioRule rule_from_name(const std::string& name) {
    if (name == "paper/reference") return RatioRule::paper_over_reference;
    if (name == "reference/paper") return RatioRule::reference_over_paper;
    throw std::invalid_argument("report: unknown ratio rule '" + name + "'");
}

} // namespace

void Report::add_input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
}

void Report::add_row(std::string label, double value, std::string unit) {
    if (unit.empty()) throw std::invalid_argument("report row '" + label + "' has no unit");
    rows.push_back(ReportRow{std::move(label), value, std::move(unit)});
}

void Report::add_comparison(std::string label, double paper, double reference, RatioRule rule) {
    ReportComparison c;
    c.label = std::move(label);
    c.paper = paper;
    c.reference = reference;
    c.rule = rule;
    const double num = rule == RatioRule::paper_over_reference ? paper : reference;
    const double den = rule == RatioRule::paper_over_reference ? reference : paper;
    if (std::isfinite(num) && std::isfinite(den) && den != 0.0) c.ratio = num / den;
    comparisons.push_back(std::move(c));
}

void Report::add_diagnostic(std::string label, double residual, double tolerance) {
    diagnostics.push_back(
        ReportDiagnostic{std::move(label), residual, tolerance, residual <= tolerance});
}

bool Report::all_pass() const {
    return std::all_of(diagnostics.begin(), diagnostics.end(),
                       [](const ReportDiagnostic& d) { return d.pass; });
}

std::string Report::to_table(int digits) const {
    std::ostringstream out;
    out << "# " << command << "\n";
    for (const auto& [key, value] : inputs) out << "#   " << key << " = " << value << "\n";

    if (!rows.empty()) {
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.label.size());
        for (const auto& r : rows)
            out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << r.label
                << std::right << std::setw(digits + 8) << format_number(r.value, digits) << "  "
                << r.unit << "\n";
    }
    if (!comparisons.empty()) {
        out << "  comparisons:\n";
        for (const auto& c : comparisons) {
            out << "    " << c.label << ": paper = " << format_number(c.paper, digits)
                << ", reference = " << format_number(c.reference, digits);
            if (c.ratio)
                out << ", " << rule_name(c.rule) << " = " << format_number(*c.ratio, digits);
            else
                out << ", ratio undefined";
            out << "\n";
        }
    }
    if (!diagnostics.empty()) {
        out << "  diagnostics:\n";
        for (const auto& d : diagnostics)
            out << "    [" << (d.pass ? "PASS" : "FAIL") << "] " << d.label
                << "  residual = " << format_number(d.residual, digits)
                << "  tol = " << format_number(d.tolerance, 3) << "\n";
    }
    return out.str();
}

std::string Report::to_csv(int digits) const {
    std::ostringstream out;
    out << "section,label,value,unit,paper,reference,ratio,residual,tolerance,pass\n";
    for (const auto& [key, value] : inputs)
        out << "input," << csv_escape(key) << "," << csv_escape(value) << ",,,,,,,\n";
    for (const auto& r : rows)
        out << "row," << csv_escape(r.label) << "," << format_number(r.value, digits) << ","
            << csv_escape(r.unit) << ",,,,,,\n";
    for (const auto& c : comparisons)
        out << "comparison," << csv_escape(c.label) << ",,," << format_number(c.paper, digits)
            << "," << format_number(c.reference, digits) << ","
            << (c.ratio ? format_number(*c.ratio, digits) : std::string()) << ",,,\n";
    for (const auto& d : diagnostics)
        out << "diagnostic," << csv_escape(d.label) << ",,,,,," << format_number(d.residual, digits)
            << "," << format_number(d.tolerance, digits) << "," << (d.pass ? "true" : "false")
            << "\n";
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : inputs) j["inputs"][key] = value;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"label", r.label}, {"value", r.value}, {"unit", r.unit}});
    j["comparisons"] = nlohmann::ordered_json::array();
    for (const auto& c : comparisons) {
        nlohmann::ordered_json jc = {{"label", c.label},
                             {"paper", c.paper},
                             {"reference", c.reference},
                             {"ratio_rule", rule_name(c.rule)}};
        if (c.ratio) jc["ratio"] = *c.ratio;
        j["comparisons"].push_back(std::move(jc));
    }
    j["diagnostics"] = nlohmann::ordered_json::array();
    for (const auto& d : diagnostics)
        j["diagnostics"].push_back({{"label", d.label},
                                    {"residual", d.residual},
                                    {"tolerance", d.tolerance},
                                    {"pass", d.pass}});
    return j.dump(2);
}

Report Report::parse_json(const std::string& text) {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items())
        r.inputs.emplace_back(key, value.get<std::string>());
    for (const auto& jr : j.at("rows"))
        r.rows.push_back(ReportRow{jr.at("label").get<std::string>(), jr.at("value").get<double>(),
                                   jr.at("unit").get<std::string>()});
    for (const auto& jc : j.at("comparisons")) {
        ReportComparison c;
        c.label = jc.at("label").get<std::string>();
        c.paper = jc.at("paper").get<double>();
        c.reference = jc.at("reference").get<double>();
        c.rule = rule_from_name(jc.at("ratio_rule").get<std::string>());
        if (jc.contains("ratio")) c.ratio = jc.at("ratio").get<double>();
        r.comparisons.push_back(std::move(c));
    }
    for (const auto& jd : j.at("diagnostics"))
        r.diagnostics.push_back(ReportDiagnostic{
            jd.at("label").get<std::string>(), jd.at("residual").get<double>(),
            jd.at("tolerance").get<double>(), jd.at("pass").get<bool>()});
    return r;
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string render_report(const Report& report, ReportFormat format, int digits) {
    switch (format) {
        case ReportFormat::table: return report.to_table(digits);
        case ReportFormat::csv: return report.to_csv(digits);
        case ReportFormat::json: return report.to_json();
    }
    throw std::invalid_argument("render_report: bad format");
}

} // namespace fluxatom
