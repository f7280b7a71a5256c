#include "c2b/inference.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "c2b/error.hpp"

namespace c2b {

double SampledCurve::x(std::size_t i) const noexcept {
    const std::size_t n = values.size();
    if (n < 2) return domain.lo;
    if (i + 1 == n) return domain.hi;
    return domain.lo + domain.span() * static_cast<double>(i) / static_cast<double>(n - 1);
}

double defuzzify_coa(const SampledCurve& curve, std::string_view variable) {
    if (curve.values.size() < 2)
        throw std::invalid_argument("Center-of-Area needs at least two samples");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        num += curve.x(i) * curve.values[i];
        den += curve.values[i];
    }
    if (!(den > 0.0)) throw NoRuleFiredError(std::string(variable));
    // Rounding can push the quotient a hair past the ends.
    return std::clamp(num / den, curve.domain.lo, curve.domain.hi);
}

FuzzyInferenceSystem::FuzzyInferenceSystem(std::vector<LinguisticVariable> inputs,
                                           std::vector<LinguisticVariable> outputs,
                                           RuleBase rules, std::size_t defuzz_resolution)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      rules_(std::move(rules)),
      resolution_(defuzz_resolution) {
    if (inputs_.empty()) throw InvalidDefinition("inference system needs at least one input");
    if (outputs_.empty()) throw InvalidDefinition("inference system needs at least one output");
    if (resolution_ < 2) throw InvalidDefinition("defuzzification resolution must be at least 2");

    std::unordered_set<std::string> names;
    for (const auto* side : {&inputs_, &outputs_})
        for (const auto& v : *side)
            if (!names.insert(v.name()).second)
                throw InvalidDefinition("variable '" + v.name() + "' is declared twice");

    if (auto diags = validate_rules(rules_, inputs_, outputs_); !diags.empty())
        throw RuleError(std::move(diags));

    auto index_of = [](const std::vector<LinguisticVariable>& vars, const Condition& c) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name() == c.variable) return CompiledCondition{i, *vars[i].term_index(c.term)};
        throw std::logic_error("unresolved condition after validation");
    };
    for (const Rule& r : rules_.rules()) {
        CompiledRule cr{{}, index_of(outputs_, r.consequent)};
        for (const Condition& c : r.antecedents) cr.antecedents.push_back(index_of(inputs_, c));
        compiled_.push_back(std::move(cr));
    }

    term_curves_.reserve(outputs_.size());
    for (const auto& out : outputs_) {
        SampledCurve grid{out.domain(), std::vector<double>(resolution_)};
        std::vector<std::vector<double>> curves;
        for (const Term& t : out.terms()) {
            std::vector<double> samples(resolution_);
            for (std::size_t i = 0; i < resolution_; ++i) samples[i] = degree(t.mf, grid.x(i));
            curves.push_back(std::move(samples));
        }
        term_curves_.push_back(std::move(curves));
    }
}

std::vector<double> FuzzyInferenceSystem::crisp_inputs(const Profile& profile) const {
    for (const auto& [name, value] : profile) {
        const bool known = std::any_of(inputs_.begin(), inputs_.end(),
                                       [&](const auto& v) { return v.name() == name; });
        if (!known) throw ProfileError(name, "unknown input variable '" + name + "'");
    }
    std::vector<double> values;
    values.reserve(inputs_.size());
    for (const auto& var : inputs_) {
        const auto it = profile.find(var.name());
        if (it == profile.end())
            throw ProfileError(var.name(), "missing value for input variable '" + var.name() + "'");
        var.require_in_domain(it->second);
        values.push_back(it->second);
    }
    return values;
}

std::vector<double> FuzzyInferenceSystem::firing_strengths(const Profile& profile) const {
    const std::vector<double> x = crisp_inputs(profile);
    std::vector<double> strengths;
    strengths.reserve(compiled_.size());
    for (const CompiledRule& r : compiled_) {
        double w = 1.0;
        for (const CompiledCondition& c : r.antecedents)
            w = std::min(w, degree(inputs_[c.variable].terms()[c.term].mf, x[c.variable]));
        strengths.push_back(w);
    }
    return strengths;
}

std::map<std::string, SampledCurve, std::less<>> FuzzyInferenceSystem::infer(
    const Profile& profile) const {
    const std::vector<double> strengths = firing_strengths(profile);

    std::vector<std::vector<double>> aggregated(outputs_.size(),
                                                std::vector<double>(resolution_, 0.0));
    for (std::size_t r = 0; r < compiled_.size(); ++r) {
        const double w = strengths[r];
        if (w <= 0.0) continue;
        const CompiledCondition& q = compiled_[r].consequent;
        const std::vector<double>& term = term_curves_[q.variable][q.term];
        std::vector<double>& acc = aggregated[q.variable];
        for (std::size_t i = 0; i < resolution_; ++i)
            acc[i] = std::max(acc[i], std::min(w, term[i]));
    }

    std::map<std::string, SampledCurve, std::less<>> out;
    for (std::size_t k = 0; k < outputs_.size(); ++k)
        out.emplace(outputs_[k].name(), SampledCurve{outputs_[k].domain(), std::move(aggregated[k])});
    return out;
}

std::map<std::string, double, std::less<>> FuzzyInferenceSystem::evaluate(
    const Profile& profile) const {
    std::map<std::string, double, std::less<>> out;
    for (const auto& [name, curve] : infer(profile)) out.emplace(name, defuzzify_coa(curve, name));
    return out;
}

double FuzzyInferenceSystem::evaluate(const Profile& profile, std::string_view output) const {
    const auto curves = infer(profile);
    const auto it = curves.find(output);
    if (it == curves.end())
        throw ProfileError(std::string(output), "unknown output variable '" + std::string(output) + "'");
    return defuzzify_coa(it->second, output);
}

}  // namespace c2b
