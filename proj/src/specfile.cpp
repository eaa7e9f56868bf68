#include "qmi/specfile.hpp"

#include <set>

#include <json.hpp>

namespace qmi {

namespace {

using nlohmann::ordered_json;

void require_fields(const ordered_json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    if (!obj.is_object()) throw SpecParseError(where + " must be an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.contains(key))
            throw SpecParseError("unknown field \"" + key + "\" in " + where);
}

Rational get_rational(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw SpecParseError(where + " must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SpecParseError(where + ": " + e.what());
    }
}

std::vector<Rational> get_rational_list(const ordered_json& j,
                                        const std::string& where) {
    if (!j.is_array()) throw SpecParseError(where + " must be an array");
    std::vector<Rational> out;
    for (const auto& item : j) out.push_back(get_rational(item, where + " entry"));
    return out;
}

long get_integer(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SpecParseError(where + " must be an integer");
    return j.get<long>();
}

ordered_json rational_list_json(const std::vector<Rational>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
    require_fields(root, {"kappa", "eta", "circuit_mu", "branch_mu", "weight", "k", "m"},
                   "spec file");
    if (!root.contains("kappa") || !root.contains("eta") ||
        !root.contains("circuit_mu") || !root.contains("branch_mu"))
        throw SpecParseError("spec file requires kappa, eta, circuit_mu, branch_mu");

    SpecFile file;
    GraphSpec g;
    g.kappa = static_cast<int>(get_integer(root["kappa"], "kappa"));
    if (!root["eta"].is_array()) throw SpecParseError("eta must be an array");
    for (const auto& e : root["eta"])
        g.eta.push_back(static_cast<int>(get_integer(e, "eta entry")));

    file.measure.graph = g;
    file.measure.circuit_mu = get_rational_list(root["circuit_mu"], "circuit_mu");

    if (!root["branch_mu"].is_array()) throw SpecParseError("branch_mu must be an array");
    for (const auto& entry : root["branch_mu"]) {
        require_fields(entry, {"r", "i", "prefix", "tail"}, "branch_mu entry");
        if (!entry.contains("r") || !entry.contains("i") || !entry.contains("tail"))
            throw SpecParseError("branch_mu entry requires r, i, tail");
        const int r = static_cast<int>(get_integer(entry["r"], "branch_mu r"));
        const int i = static_cast<int>(get_integer(entry["i"], "branch_mu i"));
        std::vector<Rational> prefix;
        if (entry.contains("prefix"))
            prefix = get_rational_list(entry["prefix"], "branch_mu prefix");
        Polynomial tail(get_rational_list(entry["tail"], "branch_mu tail"));
        if (file.measure.branch_mu.contains({r, i}))
            throw SpecParseError("duplicate branch_mu entry for (" + std::to_string(r) +
                                 "," + std::to_string(i) + ")");
        file.measure.branch_mu[{r, i}] =
            EventuallyPolynomialSeq(std::move(prefix), std::move(tail));
    }

    if (root.contains("weight")) {
        const auto& wj = root["weight"];
        require_fields(wj, {"circuit_pi", "branch_pi"}, "weight");
        if (!wj.contains("circuit_pi") || !wj.contains("branch_pi"))
            throw SpecParseError("weight requires circuit_pi and branch_pi");
        WeightSpec w;
        w.graph = g;
        w.circuit_pi = get_rational_list(wj["circuit_pi"], "circuit_pi");
        if (!wj["branch_pi"].is_array())
            throw SpecParseError("branch_pi must be an array");
        for (const auto& entry : wj["branch_pi"]) {
            require_fields(entry, {"r", "i", "prefix", "tail_const"}, "branch_pi entry");
            if (!entry.contains("r") || !entry.contains("i") ||
                !entry.contains("tail_const"))
                throw SpecParseError("branch_pi entry requires r, i, tail_const");
            const int r = static_cast<int>(get_integer(entry["r"], "branch_pi r"));
            const int i = static_cast<int>(get_integer(entry["i"], "branch_pi i"));
            WeightSpec::BranchWeight bw;
            if (entry.contains("prefix"))
                bw.prefix = get_rational_list(entry["prefix"], "branch_pi prefix");
            bw.tail_const = get_rational(entry["tail_const"], "branch_pi tail_const");
            if (w.branch_pi.contains({r, i}))
                throw SpecParseError("duplicate branch_pi entry for (" +
                                     std::to_string(r) + "," + std::to_string(i) + ")");
            w.branch_pi[{r, i}] = std::move(bw);
        }
        file.weight = std::move(w);
    }

    if (root.contains("k")) file.k = get_integer(root["k"], "k");
    if (root.contains("m")) file.m = get_integer(root["m"], "m");
    return file;
}

std::string serialize_spec_file(const SpecFile& file) {
    ordered_json root;
    root["kappa"] = file.measure.graph.kappa;
    root["eta"] = file.measure.graph.eta;
    root["circuit_mu"] = rational_list_json(file.measure.circuit_mu);
    root["branch_mu"] = ordered_json::array();
    for (const auto& [key, seq] : file.measure.branch_mu) {
        ordered_json entry;
        entry["r"] = key.first;
        entry["i"] = key.second;
        entry["prefix"] = rational_list_json(seq.prefix());
        entry["tail"] = rational_list_json(seq.tail().coefficients());
        root["branch_mu"].push_back(std::move(entry));
    }
    if (file.weight) {
        ordered_json wj;
        wj["circuit_pi"] = rational_list_json(file.weight->circuit_pi);
        wj["branch_pi"] = ordered_json::array();
        for (const auto& [key, bw] : file.weight->branch_pi) {
            ordered_json entry;
            entry["r"] = key.first;
            entry["i"] = key.second;
            entry["prefix"] = rational_list_json(bw.prefix);
            entry["tail_const"] = to_string(bw.tail_const);
            wj["branch_pi"].push_back(std::move(entry));
        }
        root["weight"] = std::move(wj);
    }
    if (file.k) root["k"] = *file.k;
    if (file.m) root["m"] = *file.m;
    return root.dump(2) + "\n";
}

}  // namespace qmi
