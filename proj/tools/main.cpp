#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmi/examples.hpp"
#include "qmi/oracle.hpp"
#include "qmi/report.hpp"
#include "qmi/specfile.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

struct CliError {
    int code;
    std::string message;
};

qmi::SpecFile load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open spec file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return qmi::parse_spec_file(buf.str());
    } catch (const qmi::SpecParseError& e) {
        throw CliError{kExitParse, std::string("parse error: ") + e.what()};
    }
}

void require_valid(const qmi::MeasureSpec& spec) {
    const auto report = qmi::validate(spec);
    if (!report.valid) {
        std::string msg = "invalid spec:";
        for (const auto& e : report.errors) msg += "\n  " + e;
        throw CliError{kExitValidation, msg};
    }
}

qmi::ReportFormat parse_format(const std::string& format) {
    if (format == "text") return qmi::ReportFormat::Text;
    if (format == "structured") return qmi::ReportFormat::Structured;
    throw CliError{kExitParse, "unknown format: " + format};
}

long require_param(const std::optional<long>& from_file, long from_flag,
                   bool flag_given, const char* name) {
    if (flag_given) return from_flag;
    if (from_file) return *from_file;
    throw CliError{kExitParse,
                   std::string("missing --") + name + " (not present in spec file)"};
}

qmi::ClassificationReport run_classify(const qmi::SpecFile& file, long k, long m,
                                       bool weighted, bool strict) {
    if (weighted) {
        if (!file.weight)
            throw CliError{kExitValidation, "spec file has no weight section"};
        auto report = qmi::classify_weighted(file.measure, *file.weight, {k, m});
        if (strict) {
            if (m < 2) throw CliError{kExitParse, "strictness requires m >= 2"};
            report.strict =
                report.verdict &&
                !qmi::classify_weighted(file.measure, *file.weight, {k, m - 1}).verdict;
        }
        return report;
    }
    if (strict) return qmi::classify_strict(file.measure, {k, m});
    return qmi::classify_composition(file.measure, {k, m});
}

// Runs the truncated-matrix oracle and compares it with the closed-form
// defects on the interior window. Returns true on exact agreement.
bool run_oracle(std::ostream& out, const qmi::SpecFile& file, long k, long m,
                bool weighted, long depth) {
    const qmi::WeightSpec* w = nullptr;
    if (weighted) {
        if (!file.weight)
            throw CliError{kExitValidation, "spec file has no weight section"};
        w = &*file.weight;
    }
    const auto window = qmi::Truncation::make(file.measure.graph, depth);
    const auto defects = qmi::defect_quadratic_form(file.measure, w, {k, m}, window);
    bool agree = true;
    out << "interior defects (matrix vs closed form):\n";
    for (const auto& [v, value] : defects) {
        const qmi::Rational closed =
            qmi::vertex_defect(file.measure, w, {k, m}, v);
        const bool same = value == closed;
        agree = agree && same;
        out << "  " << v.encode() << "  " << qmi::to_string(value) << "  "
            << qmi::to_string(closed) << "  " << (same ? "ok" : "MISMATCH") << "\n";
    }
    out << "oracle agreement: " << (agree ? "yes" : "NO") << "\n";
    return agree;
}

int run(int argc, char** argv) {
    CLI::App app{"exact classifier for (weighted) composition operators on "
                 "one-circuit directed graphs"};
    app.require_subcommand(1);

    std::string spec_path, vertex_str, quantity, format = "text", example_id;
    long k = 0, m = 2, p = 0, depth = 0;
    bool weighted = false, strict = false;

    auto* classify = app.add_subcommand("classify", "decide k-quasi-m-isometry");
    classify->add_option("--spec", spec_path)->required();
    auto* ck = classify->add_option("--k", k);
    auto* cm = classify->add_option("--m", m);
    classify->add_flag("--weighted", weighted);
    classify->add_flag("--strict", strict);
    classify->add_option("--format", format);

    auto* compute = app.add_subcommand("compute", "evaluate h, F or wgram at a vertex");
    compute->add_option("--spec", spec_path)->required();
    compute->add_option("--vertex", vertex_str)->required();
    compute->add_option("--p", p)->required();
    compute->add_option("--quantity", quantity)->required();

    auto* oracle = app.add_subcommand("oracle", "truncated-matrix verification");
    oracle->add_option("--spec", spec_path)->required();
    auto* ok_opt = oracle->add_option("--k", k);
    auto* om_opt = oracle->add_option("--m", m);
    oracle->add_flag("--weighted", weighted);
    auto* depth_opt = oracle->add_option("--depth", depth);

    auto* example = app.add_subcommand("example", "run a built-in example");
    example->add_option("id", example_id)->required();
    example->add_option("--format", format);

    auto* validate = app.add_subcommand("validate", "check a spec file");
    validate->add_option("--spec", spec_path)->required();
    validate->add_option("--format", format);

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        const auto file = load_spec(spec_path);
        require_valid(file.measure);
        const long kk = require_param(file.k, k, ck->count() > 0, "k");
        const long mm = require_param(file.m, m, cm->count() > 0, "m");
        if (kk < 0 || mm < 1) throw CliError{kExitParse, "need k >= 0 and m >= 1"};
        const auto report = run_classify(file, kk, mm, weighted, strict);
        std::cout << qmi::render_classification(report, parse_format(format));
        return kExitOk;
    }

    if (compute->parsed()) {
        const auto file = load_spec(spec_path);
        require_valid(file.measure);
        qmi::VertexId v;
        try {
            v = qmi::VertexId::decode(vertex_str);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitParse, e.what()};
        }
        const qmi::WeightSpec weights =
            file.weight ? *file.weight : qmi::WeightSpec::ones(file.measure.graph);
        qmi::Rational value;
        if (quantity == "h")
            value = qmi::radon_nikodym(file.measure, v, p);
        else if (quantity == "F")
            value = qmi::expectation_factor(file.measure, weights, v, p);
        else if (quantity == "wgram")
            value = qmi::weighted_gram(file.measure, weights, v, p);
        else
            throw CliError{kExitParse, "unknown quantity: " + quantity};
        std::cout << qmi::to_string(value) << "\n";
        return kExitOk;
    }

    if (oracle->parsed()) {
        const auto file = load_spec(spec_path);
        require_valid(file.measure);
        const long kk = require_param(file.k, k, ok_opt->count() > 0, "k");
        const long mm = require_param(file.m, m, om_opt->count() > 0, "m");
        const long window = depth_opt->count() > 0 ? depth : kk + mm + 6;
        if (window < kk + mm + 2)
            throw CliError{kExitParse, "depth must be >= k + m + 2"};
        if (!run_oracle(std::cout, file, kk, mm, weighted, window))
            return kExitInvariant;
        return kExitOk;
    }

    if (example->parsed()) {
        const auto& e = qmi::builtin_example(example_id);
        require_valid(e.spec.measure);
        std::cout << "inputs:\n" << qmi::serialize_spec_file(e.spec);
        std::cout << "claim: " << e.claim << "\n";
        const bool weighted_example = e.spec.weight.has_value();
        const auto report =
            run_classify(e.spec, *e.spec.k, *e.spec.m, weighted_example, *e.spec.m >= 2);
        std::cout << qmi::render_classification(report, parse_format(format));
        const bool agree = run_oracle(std::cout, e.spec, *e.spec.k, *e.spec.m,
                                      weighted_example, *e.spec.k + *e.spec.m + 6);
        std::cout << "claimed verdict: " << (e.claimed_verdict ? "true" : "false")
                  << ", computed verdict: " << (report.verdict ? "true" : "false")
                  << "\n";
        if (report.verdict != e.claimed_verdict)
            std::cout << "discrepancy: the computed classification does not match the "
                         "claimed one; the defect values above are exact and were "
                         "confirmed by the independent preimage/matrix oracle\n";
        return agree ? kExitOk : kExitInvariant;
    }

    if (validate->parsed()) {
        const auto file = load_spec(spec_path);
        const auto report = qmi::validate(file.measure);
        std::cout << qmi::render_validation(report, parse_format(format));
        return report.valid ? kExitOk : kExitValidation;
    }

    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const qmi::InternalInvariantError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
