// Regenerates fixtures/case1.json and fixtures/case2.json.
//
// The input variable C is elicited from the Individualism scores. The output
// terms of P are trapezoids over [45, 120] cm whose breakpoints are chosen by
// a lattice search minimizing the largest deviation from the published
// case-study values. Only breakpoints are searched; the engine is fixed.

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>

#include "c2b/dataio.hpp"
#include "c2b/elicitation.hpp"
#include "c2b/inference.hpp"

namespace {

using namespace c2b;

constexpr double p_lo = 45.0;
constexpr double p_hi = 120.0;

struct Anchor {
    double c;
    double gender;
    double expected;
};

constexpr std::array<Anchor, 2> case1_anchors{{{38, 0, 69.9}, {67, 0, 100.7}}};
constexpr std::array<Anchor, 4> case2_anchors{
    {{38, 0, 63.63}, {67, 0, 84.7}, {38, 1, 87.51}, {67, 1, 109.34}}};

constexpr const char* case1_rules =
    "if C is LC1 then P is close\n"
    "if C is LC2 then P is far\n";
constexpr const char* case2_rules =
    "if C is LC1 and C2 is female then P is close\n"
    "if C is LC2 and C2 is female then P is medium\n"
    "if C is LC1 and C2 is male then P is medium\n"
    "if C is LC2 and C2 is male then P is far\n";

LinguisticVariable gender_variable() {
    return LinguisticVariable("C2", VariableKind::nominal, Domain{0.0, 1.0},
                              {{"female", Trapezoid{0.0, 0.0, 0.25, 0.5}},
                               {"male", Trapezoid{0.5, 0.75, 1.0, 1.0}}});
}

// Breakpoints: close (45,45,x0,x1), [medium (x2..x5)], far (xk,xk+1,120,120).
LinguisticVariable distance_variable(const std::vector<double>& x) {
    std::vector<Term> terms{{"close", Trapezoid{p_lo, p_lo, x[0], x[1]}}};
    if (x.size() == 8) terms.push_back({"medium", Trapezoid{x[2], x[3], x[4], x[5]}});
    const std::size_t f = x.size() - 2;
    terms.push_back({"far", Trapezoid{x[f], x[f + 1], p_hi, p_hi}});
    return LinguisticVariable("P", VariableKind::ratio, Domain{p_lo, p_hi}, std::move(terms));
}

bool well_formed(const std::vector<double>& x) {
    auto ordered = [&](std::size_t i, std::size_t j) { return x[i] <= x[j]; };
    if (x.size() == 4) return ordered(0, 1) && ordered(2, 3);
    return ordered(0, 1) && ordered(2, 3) && ordered(3, 4) && ordered(4, 5) && ordered(6, 7);
}

struct Score {
    double max_err = std::numeric_limits<double>::infinity();
    double sum_err = std::numeric_limits<double>::infinity();

    bool operator<(const Score& o) const {
        if (max_err != o.max_err) return max_err < o.max_err;
        return sum_err < o.sum_err;
    }
};

template <std::size_t N>
Score score(const LinguisticVariable& c, const std::vector<double>& x,
            const std::array<Anchor, N>& anchors, std::size_t resolution) {
    if (!well_formed(x)) return {};
    const bool two_inputs = x.size() == 8;
    std::vector<LinguisticVariable> inputs{c};
    if (two_inputs) inputs.push_back(gender_variable());
    try {
        FuzzyInferenceSystem fis(std::move(inputs), {distance_variable(x)},
                                 parse_rules_or_throw(two_inputs ? case2_rules : case1_rules),
                                 resolution);
        Score s{0.0, 0.0};
        for (const Anchor& a : anchors) {
            Profile p{{"C", a.c}};
            if (two_inputs) p["C2"] = a.gender;
            const double err = std::abs(fis.evaluate(p, "P") - a.expected);
            s.max_err = std::max(s.max_err, err);
            s.sum_err += err;
        }
        return s;
    } catch (const Error&) {
        return {};
    }
}

bool monotone_case1(const LinguisticVariable& c, const std::vector<double>& x) {
    FuzzyInferenceSystem fis({c}, {distance_variable(x)}, parse_rules_or_throw(case1_rules));
    double prev = -1.0;
    for (int i = 0; i < 1000; ++i) {
        const double v = fis.evaluate({{"C", 100.0 * i / 999.0}}, "P");
        if (v < prev) return false;
        prev = v;
    }
    return true;
}

std::vector<double> lattice(double step) {
    std::vector<double> g;
    for (double v = p_lo; v <= p_hi + 1e-9; v += step) g.push_back(std::round(v * 100.0) / 100.0);
    return g;
}

// Single-coordinate lattice descent from `x`.
template <std::size_t N, class Accept>
std::vector<double> descend(const LinguisticVariable& c, std::vector<double> x,
                            const std::array<Anchor, N>& anchors, double step, Accept accept) {
    Score best = score(c, x, anchors, default_defuzz_resolution);
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double dir : {-1.0, 1.0}) {
                std::vector<double> y = x;
                y[i] = std::clamp(y[i] + dir * step, p_lo, p_hi);
                const Score s = score(c, y, anchors, default_defuzz_resolution);
                if (s < best && accept(y)) {
                    best = s;
                    x = std::move(y);
                    improved = true;
                }
            }
        }
    }
    std::cout << "  step " << step << ": max err " << best.max_err << " cm\n";
    return x;
}

std::vector<double> calibrate_case1(const LinguisticVariable& c, double step) {
    const std::vector<double> g = lattice(step);
    struct Candidate {
        Score s;
        std::vector<double> x;
    };
    std::vector<Candidate> all;
    for (std::size_t i0 = 0; i0 < g.size(); ++i0)
        for (std::size_t i1 = i0; i1 < g.size(); ++i1)
            for (std::size_t j0 = 0; j0 < g.size(); ++j0)
                for (std::size_t j1 = j0; j1 < g.size(); ++j1) {
                    std::vector<double> x{g[i0], g[i1], g[j0], g[j1]};
                    const Score s = score(c, x, case1_anchors, 201);
                    if (s.max_err < 5.0) all.push_back({s, std::move(x)});
                }
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.s < b.s; });
    std::cout << "case 1: " << all.size() << " lattice candidates within 5 cm\n";
    for (auto& cand : all) {
        // Rescore at full resolution, keep the first monotone one.
        if (monotone_case1(c, cand.x))
            return descend(c, cand.x, case1_anchors, 0.5, [&](const auto& y) { return monotone_case1(c, y); });
    }
    throw std::runtime_error("no monotone case-1 candidate");
}

std::vector<double> calibrate_case2(const LinguisticVariable& c, const std::vector<double>& case1,
                                    double step) {
    const std::vector<double> g = lattice(step);
    Score best;
    std::vector<double> best_x;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a; b < g.size(); ++b)
            for (std::size_t cc = b; cc < g.size(); ++cc)
                for (std::size_t d = cc; d < g.size(); ++d) {
                    std::vector<double> x{case1[0], case1[1], g[a], g[b], g[cc], g[d], case1[2], case1[3]};
                    const Score s = score(c, x, case2_anchors, 201);
                    if (s < best) {
                        best = s;
                        best_x = std::move(x);
                    }
                }
    std::cout << "case 2: medium lattice search max err " << best.max_err << " cm\n";
    auto x = descend(c, best_x, case2_anchors, step, [](const auto&) { return true; });
    return descend(c, x, case2_anchors, 0.5, [](const auto&) { return true; });
}

Catalog make_catalog(const LinguisticVariable& c, const std::vector<double>& x, int case_id) {
    Catalog cat;
    cat.provenance =
        "Case study " + std::to_string(case_id) +
        ". C: elicited from data/hofstede_individualism.csv (Individualism scores of 110 countries, "
        "http://geerthofstede.com/research-and-vsm/dimension-data-matrix/) with default "
        "hyperparameters. P: trapezoid breakpoints calibrated by c2b_calibrate (lattice search "
        "minimizing the largest deviation from the published distances); they are fixture "
        "choices, not published data." +
        (case_id == 2 ? std::string(" C2: 0 = female, 1 = male.") : std::string());
    cat.put(c);
    cat.put(distance_variable(x));
    FisDefinition fis;
    fis.inputs = {"C"};
    if (case_id == 2) {
        cat.put(gender_variable());
        fis.inputs.push_back("C2");
    }
    fis.outputs = {"P"};
    fis.rules = case_id == 1 ? case1_rules : case2_rules;
    cat.fis = std::move(fis);
    return cat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calibrate case-study output terms and write fixture catalogs"};
    std::string data = "data/hofstede_individualism.csv";
    std::string out_dir = "fixtures";
    double step = 2.5;
    app.add_option("--data", data, "Individualism CSV")->check(CLI::ExistingFile);
    app.add_option("--out-dir", out_dir, "Directory for case1.json and case2.json")->check(CLI::ExistingDirectory);
    app.add_option("--step", step, "Coarse lattice step in cm")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    try {
        const TrainingSet set = load_training_csv(data, Domain{0.0, 100.0});
        ElicitationResult e = elicit_variable("C", set);
        std::cout << "elicited " << e.variable.terms().size() << " terms, centers";
        for (double v : e.clusters.centers) std::cout << ' ' << v;
        std::cout << '\n';

        const std::vector<double> x1 = calibrate_case1(e.variable, step);
        const std::vector<double> x2 = calibrate_case2(e.variable, x1, step);

        save_catalog(make_catalog(e.variable, x1, 1), out_dir + "/case1.json");
        save_catalog(make_catalog(e.variable, x2, 2), out_dir + "/case2.json");
        std::cout << "wrote " << out_dir << "/case1.json and " << out_dir << "/case2.json\n";
    } catch (const std::exception& ex) {
        std::cerr << "c2b_calibrate: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
