#include "c2b/variable.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "c2b/error.hpp"

namespace c2b {

const char* to_string(VariableKind kind) noexcept {
    switch (kind) {
        case VariableKind::nominal: return "nominal";
        case VariableKind::ordinal: return "ordinal";
        case VariableKind::interval: return "interval";
        case VariableKind::ratio: return "ratio";
    }
    return "?";
}

std::optional<VariableKind> parse_variable_kind(std::string_view text) noexcept {
    if (text == "nominal") return VariableKind::nominal;
    if (text == "ordinal") return VariableKind::ordinal;
    if (text == "interval") return VariableKind::interval;
    if (text == "ratio") return VariableKind::ratio;
    return std::nullopt;
}

bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

LinguisticVariable::LinguisticVariable(std::string name, VariableKind kind, Domain domain,
                                       std::vector<Term> terms, std::vector<int> codes)
    : name_(std::move(name)),
      kind_(kind),
      domain_(domain),
      terms_(std::move(terms)),
      codes_(std::move(codes)) {
    auto fail = [this](const std::string& why) {
        throw InvalidDefinition("variable '" + name_ + "': " + why);
    };
    if (!is_identifier(name_)) fail("name is not an identifier");
    if (!std::isfinite(domain_.lo) || !std::isfinite(domain_.hi) || !(domain_.lo < domain_.hi))
        fail("domain must be a finite interval with lo < hi");
    if (terms_.empty()) fail("at least one term is required");

    std::unordered_set<std::string> seen;
    for (const Term& t : terms_) {
        if (!is_identifier(t.name)) fail("term name '" + t.name + "' is not an identifier");
        if (!seen.insert(t.name).second) fail("duplicate term '" + t.name + "'");
        if (std::string why = check(t.mf); !why.empty()) fail("term '" + t.name + "': " + why);
    }

    std::sort(codes_.begin(), codes_.end());
    if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end())
        fail("duplicate domain code");
    for (int code : codes_)
        if (!domain_.contains(code)) fail("code " + std::to_string(code) + " outside domain");
    if (!codes_.empty()) {
        for (const Term& t : terms_) {
            const auto* label = std::get_if<CrispLabel>(&t.mf);
            if (!label) continue;
            for (int level : label->levels)
                if (!std::binary_search(codes_.begin(), codes_.end(), level))
                    fail("term '" + t.name + "' uses unknown code " + std::to_string(level));
        }
    }
}

std::optional<std::size_t> LinguisticVariable::term_index(std::string_view term) const noexcept {
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].name == term) return i;
    return std::nullopt;
}

std::vector<std::string> LinguisticVariable::term_names() const {
    std::vector<std::string> names;
    names.reserve(terms_.size());
    for (const Term& t : terms_) names.push_back(t.name);
    return names;
}

bool LinguisticVariable::accepts(double x) const noexcept {
    if (!std::isfinite(x) || !domain_.contains(x)) return false;
    if (codes_.empty()) return true;
    const double r = std::round(x);
    return r == x && std::binary_search(codes_.begin(), codes_.end(), static_cast<int>(r));
}

void LinguisticVariable::require_in_domain(double x) const {
    if (!accepts(x)) throw DomainError(name_, x, domain_.lo, domain_.hi);
}

double FuzzifiedValue::at(std::string_view term) const {
    for (const auto& [name, mu] : degrees)
        if (name == term) return mu;
    throw std::out_of_range("variable '" + variable + "' has no term '" + std::string(term) + "'");
}

FuzzifiedValue fuzzify(const LinguisticVariable& var, double x) {
    var.require_in_domain(x);
    FuzzifiedValue out{var.name(), {}};
    out.degrees.reserve(var.terms().size());
    for (const Term& t : var.terms()) out.degrees.emplace_back(t.name, degree(t.mf, x));
    return out;
}

CoverageReport coverage(const LinguisticVariable& var, Domain range, double threshold,
                        std::size_t samples) {
    CoverageReport report;
    report.weakest_at = range.lo;
    auto visit = [&](double x) {
        double best = 0.0;
        for (const Term& t : var.terms()) best = std::max(best, degree(t.mf, x));
        if (best < report.weakest) {
            report.weakest = best;
            report.weakest_at = x;
        }
    };
    if (!var.codes().empty()) {
        for (int code : var.codes())
            if (range.contains(code)) visit(code);
    } else if (samples < 2 || range.lo == range.hi) {
        visit(range.lo);
    } else {
        for (std::size_t i = 0; i < samples; ++i)
            visit(range.lo + range.span() * static_cast<double>(i) / static_cast<double>(samples - 1));
    }
    report.covered = report.weakest >= threshold;
    return report;
}

}  // namespace c2b
