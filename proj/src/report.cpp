#include "qmi/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qmi {

namespace {

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::PerVertex: return "per-vertex";
        case Criterion::TheoremForm: return "theorem-form";
        case Criterion::WeightedTheoremForm: return "weighted-theorem-form";
    }
    return "?";
}

std::string branch_key(const std::pair<int, int>& key) {
    return "b:" + std::to_string(key.first) + ":" + std::to_string(key.second);
}

}  // namespace

std::string render_classification(const ClassificationReport& report,
                                  ReportFormat format) {
    if (format == ReportFormat::Structured) {
        nlohmann::ordered_json j;
        j["verdict"] = report.verdict;
        j["strict"] = report.strict;
        j["criterion"] = criterion_name(report.criterion_used);
        j["circuit_defects"] = nlohmann::ordered_json::object();
        for (const auto& [r, d] : report.circuit_defects)
            j["circuit_defects"]["c:" + std::to_string(r)] = to_string(d);
        j["branch_degrees"] = nlohmann::ordered_json::object();
        for (const auto& [key, deg] : report.branch_degrees)
            j["branch_degrees"][branch_key(key)] = degree_to_string(deg);
        if (!report.branch_defects_vanish.empty()) {
            j["branch_defects_vanish"] = nlohmann::ordered_json::object();
            for (const auto& [key, ok] : report.branch_defects_vanish)
                j["branch_defects_vanish"][branch_key(key)] = ok;
        }
        j["oracle_checked"] = report.oracle_checked;
        if (!report.notes.empty()) j["notes"] = report.notes;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "verdict: " << (report.verdict ? "true" : "false") << "\n";
    out << "strict: " << (report.strict ? "true" : "false") << "\n";
    out << "criterion: " << criterion_name(report.criterion_used) << "\n";
    out << "circuit defects:\n";
    for (const auto& [r, d] : report.circuit_defects)
        out << "  c:" << r << "  " << to_string(d) << "\n";
    out << "branch degrees:\n";
    for (const auto& [key, deg] : report.branch_degrees)
        out << "  " << branch_key(key) << "  " << degree_to_string(deg) << "\n";
    if (!report.branch_defects_vanish.empty()) {
        out << "branch defects vanish:\n";
        for (const auto& [key, ok] : report.branch_defects_vanish)
            out << "  " << branch_key(key) << "  " << (ok ? "yes" : "no") << "\n";
    }
    out << "oracle checked: " << (report.oracle_checked ? "yes" : "no") << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

std::string render_validation(const ValidationReport& report, ReportFormat format) {
    if (format == ReportFormat::Structured) {
        nlohmann::ordered_json j;
        j["valid"] = report.valid;
        j["errors"] = report.errors;
        if (report.valid) {
            j["sup_h1"] = to_string(report.sup_h1);
            j["horizon"] = report.horizon;
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "valid: " << (report.valid ? "true" : "false") << "\n";
    for (const auto& e : report.errors) out << "error: " << e << "\n";
    if (report.valid) {
        out << "sup h_1: " << to_string(report.sup_h1) << "\n";
        out << "horizon: " << report.horizon << "\n";
    }
    return out.str();
}

}  // namespace qmi
