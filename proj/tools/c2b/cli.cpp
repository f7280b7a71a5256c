#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "c2b/dataio.hpp"
#include "c2b/elicitation.hpp"
#include "c2b/error.hpp"
#include "c2b/fixtures.hpp"
#include "c2b/surface.hpp"

namespace c2b::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Raised for bad command-line values that CLI11 cannot check itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Domain parse_domain(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--domain must be lo,hi");
    try {
        std::size_t used = 0;
        const std::string lo_text = text.substr(0, comma);
        const std::string hi_text = text.substr(comma + 1);
        const double lo = std::stod(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument(lo_text);
        const double hi = std::stod(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument(hi_text);
        if (!(lo < hi)) throw UsageError("--domain needs lo < hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--domain must be two numbers lo,hi, got '" + text + "'");
    }
}

// Accepts repeated and comma-separated var=value pairs.
Profile parse_profile(const std::vector<std::string>& items) {
    Profile p;
    for (const std::string& item : items) {
        std::stringstream ss(item);
        std::string pair;
        while (std::getline(ss, pair, ',')) {
            const auto eq = pair.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("expected var=value, got '" + pair + "'");
            const std::string name = pair.substr(0, eq);
            const std::string value = pair.substr(eq + 1);
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(value, &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used == 0 || used != value.size())
                throw UsageError("value of '" + name + "' is not a number: '" + value + "'");
            p.insert_or_assign(name, v);
        }
    }
    return p;
}

std::string read_rules_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_text_file(path);
}

struct ElicitArgs {
    std::string data;
    std::string domain;
    std::string out;
    std::string name = "C";
    std::string kind = "interval";
    double radius = SubtractiveOptions{}.radius;
};

int cmd_elicit(const ElicitArgs& a, std::ostream& out, std::ostream& err) {
    const Domain domain = parse_domain(a.domain);
    const auto kind = parse_variable_kind(a.kind);
    if (!kind) throw UsageError("unknown --kind '" + a.kind + "'");
    if (!is_identifier(a.name)) throw UsageError("--name must be an identifier");

    const TrainingSet data = load_training_csv(a.data, domain);
    ElicitationConfig cfg;
    cfg.subtractive.radius = a.radius;
    cfg.kind = *kind;
    const ElicitationResult r = elicit_variable(a.name, data, cfg);

    Catalog cat;
    cat.provenance = "elicited from " + a.data;
    cat.put(r.variable);
    save_catalog(cat, a.out);

    out << "k=" << r.clusters.clusters() << '\n';
    out << "centers=";
    for (std::size_t j = 0; j < r.clusters.clusters(); ++j)
        out << (j ? "," : "") << format_number(r.clusters.centers[j]);
    out << '\n';
    for (std::size_t j = 0; j < r.fits.size(); ++j)
        out << r.variable.terms()[j].name << ".rms=" << format_number(r.fits[j].rms) << '\n';
    if (!r.coverage.covered)
        err << "warning: weakest coverage " << r.coverage.weakest << " at " << r.coverage.weakest_at << '\n';
    return exit_ok;
}

struct ValidateArgs {
    std::string catalog;
    std::string rules;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
    const Catalog cat = load_catalog(a.catalog);
    std::vector<std::string> in_names = a.inputs;
    std::vector<std::string> out_names = a.outputs;
    if (cat.fis) {
        if (in_names.empty()) in_names = cat.fis->inputs;
        if (out_names.empty()) out_names = cat.fis->outputs;
    }
    if (in_names.empty() || out_names.empty())
        throw UsageError("catalog has no fis section; pass --inputs and --outputs");

    std::string source;
    if (!a.rules.empty()) {
        source = read_rules_source(a.rules);
    } else if (cat.fis) {
        source = cat.fis->rules;
    } else {
        throw UsageError("no rules: pass --rules");
    }

    std::vector<LinguisticVariable> inputs;
    std::vector<LinguisticVariable> outputs;
    for (const auto& n : in_names) inputs.push_back(cat.at(n));
    for (const auto& n : out_names) outputs.push_back(cat.at(n));

    ParseResult parsed = parse_rules(source);
    std::vector<Diagnostic> diags = parsed.diagnostics;
    if (parsed) diags = validate_rules(*parsed.rules, inputs, outputs);
    if (!diags.empty()) {
        for (const auto& d : diags) err << to_string(d) << '\n';
        return exit_usage;
    }
    out << "ok: " << parsed.rules->size() << " rules\n";
    return exit_ok;
}

int cmd_eval(const std::string& fis_path, const std::vector<std::string>& in, std::ostream& out) {
    const FuzzyInferenceSystem fis = load_catalog(fis_path).build_fis();
    for (const auto& [name, value] : fis.evaluate(parse_profile(in)))
        out << name << '=' << format_number(value) << '\n';
    return exit_ok;
}

struct SurfaceArgs {
    std::string fis;
    std::vector<std::string> axes;
    std::vector<std::string> fixed;
    std::string output;
    std::string out = "-";
    unsigned threads = 1;
};

int cmd_surface(const SurfaceArgs& a, std::ostream& out) {
    const FuzzyInferenceSystem fis = load_catalog(a.fis).build_fis();
    std::vector<AxisSpec> axes;
    for (const auto& text : a.axes) {
        try {
            axes.push_back(parse_axis(text));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::string output = a.output;
    if (output.empty()) {
        if (fis.outputs().size() != 1) throw UsageError("system has several outputs; pass --output");
        output = fis.outputs().front().name();
    }
    const SurfaceGrid grid = compute_surface(fis, axes, output, parse_profile(a.fixed), a.threads);
    const std::string csv = to_csv(grid);
    if (a.out == "-") {
        out << csv;
    } else {
        std::ofstream f(a.out, std::ios::binary | std::ios::trunc);
        if (!(f << csv)) throw Error("cannot write '" + a.out + "'");
    }
    return exit_ok;
}

// Problems with what the user supplied, as opposed to pipeline failures.
bool is_input_error(const std::exception& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const RuleError*>(&e) ||
           dynamic_cast<const DatasetError*>(&e) || dynamic_cast<const SchemaError*>(&e) ||
           dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ProfileError*>(&e);
}

std::string describe(const Profile& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + format_number(v);
    return s;
}

int cmd_reproduce(int case_id, std::ostream& out, std::ostream& err) {
    if (case_id != 1 && case_id != 2)
        throw UsageError("unknown case " + std::to_string(case_id) + " (valid cases: 1, 2)");

    // Re-run elicitation from the bundled scores; only P and the rules come
    // from the calibrated catalog.
    Catalog cat = fixtures::case_catalog(case_id);
    const ElicitationResult elicited = elicit_variable("C", fixtures::hofstede_training_set());
    out << "elicitation: k=" << elicited.clusters.clusters() << " centers=";
    for (std::size_t j = 0; j < elicited.clusters.clusters(); ++j)
        out << (j ? "," : "") << std::fixed << std::setprecision(3) << elicited.clusters.centers[j];
    out << '\n';
    if (!(elicited.variable == cat.at("C")))
        err << "note: freshly elicited C differs from the catalog's stored C\n";
    cat.put(elicited.variable);
    const FuzzyInferenceSystem fis = cat.build_fis();

    bool all_ok = true;
    out << std::left << std::setw(16) << "input" << std::right << std::setw(12) << "expected"
        << std::setw(12) << "actual" << std::setw(10) << "|delta|" << "  status\n";
    for (const auto& anchor : fixtures::case_anchors(case_id)) {
        const double actual = fis.evaluate(anchor.input, "P");
        const double delta = std::abs(actual - anchor.expected);
        const bool ok = delta <= fixtures::anchor_tolerance_cm;
        all_ok = all_ok && ok;
        out << std::left << std::setw(16) << describe(anchor.input) << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << anchor.expected << std::setw(12) << actual
            << std::setw(10) << delta << "  " << (ok ? "ok" : "FAIL") << '\n';
    }
    out << (all_ok ? "all" : "not all") << " values within " << format_number(fixtures::anchor_tolerance_cm) << " cm\n";
    return all_ok ? exit_ok : exit_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Culture-to-behaviour fuzzy inference: elicit variables, validate rules, evaluate profiles"};
    app.name("c2b");
    app.require_subcommand(1);

    ElicitArgs elicit;
    auto* sc_elicit = app.add_subcommand("elicit", "Elicit a linguistic variable from a 1-D dataset");
    sc_elicit->add_option("--data", elicit.data, "CSV with header label,value")->required();
    sc_elicit->add_option("--domain", elicit.domain, "Variable domain as lo,hi")->required();
    sc_elicit->add_option("--radius", elicit.radius, "Subtractive clustering radius in (0, 1]")
        ->capture_default_str();
    sc_elicit->add_option("--name", elicit.name, "Variable name")->capture_default_str();
    sc_elicit->add_option("--kind", elicit.kind, "nominal, ordinal, interval or ratio")->capture_default_str();
    sc_elicit->add_option("--out", elicit.out, "Catalog JSON to write")->required();

    ValidateArgs validate;
    auto* sc_validate = app.add_subcommand("validate", "Check rules against a catalog");
    sc_validate->add_option("--catalog", validate.catalog, "Catalog JSON")->required();
    sc_validate->add_option("--rules", validate.rules, "Rule file, or - for standard input");
    sc_validate->add_option("--inputs", validate.inputs, "Input variable names")->delimiter(',');
    sc_validate->add_option("--outputs", validate.outputs, "Output variable names")->delimiter(',');

    std::string eval_fis;
    std::vector<std::string> eval_in;
    auto* sc_eval = app.add_subcommand("eval", "Evaluate one input profile");
    sc_eval->add_option("--fis", eval_fis, "Catalog JSON with a fis section")->required();
    sc_eval->add_option("--in", eval_in, "Inputs as var=value[,var=value...]")->required();

    SurfaceArgs surface;
    auto* sc_surface = app.add_subcommand("surface", "Export an output surface over 1 or 2 inputs as CSV");
    sc_surface->add_option("--fis", surface.fis, "Catalog JSON with a fis section")->required();
    sc_surface->add_option("--axis", surface.axes, "Axis as var=lo:hi:steps (once or twice)")
        ->required()
        ->expected(1, 2);
    sc_surface->add_option("--in", surface.fixed, "Values of inputs not on an axis");
    sc_surface->add_option("--output", surface.output, "Output variable (default: the only one)");
    sc_surface->add_option("--out", surface.out, "CSV path, - for standard output")->capture_default_str();
    sc_surface->add_option("--threads", surface.threads, "Worker threads")->capture_default_str();

    int case_id = 0;
    auto* sc_reproduce = app.add_subcommand("reproduce", "Reproduce a bundled case study");
    sc_reproduce->add_option("--case", case_id, "Case study: 1 or 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "elicit") return cmd_elicit(elicit, out, err);
        if (cmd == "validate") return cmd_validate(validate, out, err);
        if (cmd == "eval") return cmd_eval(eval_fis, eval_in, out);
        if (cmd == "surface") return cmd_surface(surface, out);
        if (cmd == "reproduce") return cmd_reproduce(case_id, out, err);
    } catch (const std::exception& e) {
        err << "c2b " << cmd << ": " << e.what() << '\n';
        return is_input_error(e) ? exit_usage : exit_failed;
    }
    return exit_usage;
}

}  // namespace c2b::cli
