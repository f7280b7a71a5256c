#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "c2b/rules.hpp"
#include "c2b/variable.hpp"

namespace c2b {

/// Number of uniform output-domain samples used by default for
/// Center-of-Area defuzzification.
inline constexpr std::size_t default_defuzz_resolution = 1001;

/// Input profile: crisp value per input variable name.
using Profile = std::map<std::string, double, std::less<>>;

/// Membership curve sampled at `values.size()` uniform points of `domain`,
/// endpoints included.
struct SampledCurve {
    Domain domain;
    std::vector<double> values;

    double x(std::size_t i) const noexcept;
};

/// Centroid sum(x_i * mu_i) / sum(mu_i) over the samples.
/// Throws NoRuleFiredError (naming `variable`) for an all-zero curve and
/// std::invalid_argument for fewer than two samples.
double defuzzify_coa(const SampledCurve& curve, std::string_view variable = {});

/// Mamdani system: min conjunction, min implication, max aggregation and
/// Center-of-Area defuzzification.
///
/// Immutable after construction; concurrent evaluate/infer calls are safe.
class FuzzyInferenceSystem {
public:
    /// Validates the rule base against the variables and precomputes sampled
    /// consequent curves. Throws RuleError or InvalidDefinition.
    FuzzyInferenceSystem(std::vector<LinguisticVariable> inputs,
                         std::vector<LinguisticVariable> outputs, RuleBase rules,
                         std::size_t defuzz_resolution = default_defuzz_resolution);

    const std::vector<LinguisticVariable>& inputs() const noexcept { return inputs_; }
    const std::vector<LinguisticVariable>& outputs() const noexcept { return outputs_; }
    const RuleBase& rules() const noexcept { return rules_; }
    std::size_t defuzz_resolution() const noexcept { return resolution_; }

    /// Firing strength of every rule, in rule order.
    std::vector<double> firing_strengths(const Profile& profile) const;

    /// Aggregated (max of clipped consequents) curve per output variable.
    std::map<std::string, SampledCurve, std::less<>> infer(const Profile& profile) const;

    /// Crisp value per output variable.
    std::map<std::string, double, std::less<>> evaluate(const Profile& profile) const;

    /// Single-output shortcut.
    double evaluate(const Profile& profile, std::string_view output) const;

private:
    struct CompiledCondition {
        std::size_t variable;
        std::size_t term;
    };
    struct CompiledRule {
        std::vector<CompiledCondition> antecedents;
        CompiledCondition consequent;
    };

    std::vector<double> crisp_inputs(const Profile& profile) const;

    std::vector<LinguisticVariable> inputs_;
    std::vector<LinguisticVariable> outputs_;
    RuleBase rules_;
    std::size_t resolution_;
    std::vector<CompiledRule> compiled_;
    // term_curves_[output][term] sampled at resolution_ points
    std::vector<std::vector<std::vector<double>>> term_curves_;
};

}  // namespace c2b
