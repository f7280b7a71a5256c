#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "c2b/error.hpp"
#include "c2b/variable.hpp"

namespace c2b {

/// 1-based position in rule source text.
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// `variable is term`
struct Condition {
    std::string variable;
    std::string term;
    SourcePos variable_pos;
    SourcePos term_pos;
};

struct Rule {
    std::vector<Condition> antecedents;
    Condition consequent;
};

struct Diagnostic {
    enum class Kind {
        syntax,
        duplicate_antecedent,
        empty_rule_base,
        unknown_variable,
        unknown_term,
        side_mismatch,
    };

    Kind kind;
    SourcePos pos;
    std::string message;
};

/// "line:column: message"
std::string to_string(const Diagnostic& d);

/// Ordered, nonempty list of rules plus the text they were parsed from.
class RuleBase {
public:
    RuleBase(std::vector<Rule> rules, std::string source);

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const std::string& source() const noexcept { return source_; }
    std::size_t size() const noexcept { return rules_.size(); }

private:
    std::vector<Rule> rules_;
    std::string source_;
};

struct ParseResult {
    std::optional<RuleBase> rules;
    std::vector<Diagnostic> diagnostics;

    explicit operator bool() const noexcept { return rules.has_value(); }
};

/// Parses one rule per line:
///
///   rule := "if" cond ("and" cond)* "then" cond
///   cond := IDENT "is" IDENT
///
/// Keywords are case-insensitive, identifiers are not. `#` starts a comment.
/// Never throws on bad input; every problem is reported as a diagnostic.
ParseResult parse_rules(std::string_view text);

/// Validation error carrying every diagnostic found.
class RuleError : public Error {
public:
    explicit RuleError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// parse_rules, throwing RuleError on any diagnostic.
RuleBase parse_rules_or_throw(std::string_view text);

/// Resolves every (variable, term) pair: antecedents against `inputs`,
/// consequents against `outputs`. Returns all problems; empty means valid.
std::vector<Diagnostic> validate_rules(const RuleBase& rules,
                                       std::span<const LinguisticVariable> inputs,
                                       std::span<const LinguisticVariable> outputs);

/// Canonical text, one rule per line with lowercase keywords.
std::string print_rules(const RuleBase& rules);

}  // namespace c2b
