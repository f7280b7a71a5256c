#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2b/membership.hpp"

namespace c2b {

/// Level of measurement of the underlying quantity.
enum class VariableKind { nominal, ordinal, interval, ratio };

const char* to_string(VariableKind kind) noexcept;
std::optional<VariableKind> parse_variable_kind(std::string_view text) noexcept;

/// Closed real interval [lo, hi].
struct Domain {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    double span() const noexcept { return hi - lo; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

struct Term {
    std::string name;
    MembershipFunction mf;

    friend bool operator==(const Term&, const Term&) = default;
};

/// True for letters, digits and underscores starting with a letter.
bool is_identifier(std::string_view s) noexcept;

/// A linguistic variable: name, domain, ordered terms and their membership
/// functions, tagged with a level of measurement. Nominal and ordinal
/// variables may restrict the domain to a list of integer codes.
class LinguisticVariable {
public:
    /// Throws InvalidDefinition when any invariant is violated.
    LinguisticVariable(std::string name, VariableKind kind, Domain domain,
                       std::vector<Term> terms, std::vector<int> codes = {});

    const std::string& name() const noexcept { return name_; }
    VariableKind kind() const noexcept { return kind_; }
    const Domain& domain() const noexcept { return domain_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::vector<int>& codes() const noexcept { return codes_; }

    std::optional<std::size_t> term_index(std::string_view term) const noexcept;
    std::vector<std::string> term_names() const;

    bool accepts(double x) const noexcept;

    /// Throws DomainError when `x` is not an admissible value.
    void require_in_domain(double x) const;

    friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;

private:
    std::string name_;
    VariableKind kind_;
    Domain domain_;
    std::vector<Term> terms_;
    std::vector<int> codes_;
};

/// Per-term degrees of one crisp value, in the variable's term order.
struct FuzzifiedValue {
    std::string variable;
    std::vector<std::pair<std::string, double>> degrees;

    /// Degree of `term`; throws std::out_of_range for an unknown term.
    double at(std::string_view term) const;
};

FuzzifiedValue fuzzify(const LinguisticVariable& var, double x);

struct CoverageReport {
    bool covered = true;       // every sample reached the threshold
    double weakest = 1.0;      // smallest max-term degree seen
    double weakest_at = 0.0;   // where it was seen
};

/// Samples [lo, hi] and checks that some term reaches `threshold` at every
/// sample. Nominal/ordinal variables with codes are checked on the codes.
CoverageReport coverage(const LinguisticVariable& var, Domain range, double threshold,
                        std::size_t samples = 1001);

}  // namespace c2b
