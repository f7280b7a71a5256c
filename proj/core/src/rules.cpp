#include "c2b/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace c2b {

namespace {

enum class TokenKind { identifier, kw_if, kw_and, kw_then, kw_is, end };

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

TokenKind classify(std::string_view word) {
    if (iequals(word, "if")) return TokenKind::kw_if;
    if (iequals(word, "and")) return TokenKind::kw_and;
    if (iequals(word, "then")) return TokenKind::kw_then;
    if (iequals(word, "is")) return TokenKind::kw_is;
    return TokenKind::identifier;
}

std::string describe(const Token& t) {
    if (t.kind == TokenKind::end) return "end of line";
    return "'" + t.text + "'";
}

bool is_word_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

// A syntax problem on the current line.
struct LineError {
    SourcePos pos;
    std::string message;
};

class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    // Returns nullopt for a blank or comment-only line.
    std::optional<Rule> parse() {
        tokenize();
        if (tokens_.size() == 1) return std::nullopt;

        Rule rule;
        expect(TokenKind::kw_if, "expected 'if'");
        rule.antecedents.push_back(condition());
        while (peek().kind == TokenKind::kw_and) {
            ++next_;
            rule.antecedents.push_back(condition());
        }
        expect(TokenKind::kw_then, "expected 'and' or 'then'");
        rule.consequent = condition();
        if (peek().kind != TokenKind::end)
            throw LineError{peek().pos, "expected end of line, found " + describe(peek())};
        return rule;
    }

private:
    void tokenize() {
        std::size_t i = 0;
        while (i < line_.size()) {
            const char ch = line_[i];
            if (ch == '#') break;
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++i;
                continue;
            }
            const SourcePos pos{line_no_, i + 1};
            if (!is_word_char(ch)) {
                throw LineError{pos, std::string("unexpected character '") + ch + "'"};
            }
            std::size_t j = i;
            while (j < line_.size() && is_word_char(line_[j])) ++j;
            const std::string_view word = line_.substr(i, j - i);
            if (!std::isalpha(static_cast<unsigned char>(word.front())))
                throw LineError{pos, "identifier '" + std::string(word) + "' must start with a letter"};
            tokens_.push_back({classify(word), std::string(word), pos});
            i = j;
        }
        const std::size_t end_col =
            tokens_.empty() ? 1 : tokens_.back().pos.column + tokens_.back().text.size();
        tokens_.push_back({TokenKind::end, {}, {line_no_, end_col}});
    }

    const Token& peek() const { return tokens_[next_]; }

    const Token& expect(TokenKind kind, const std::string& what) {
        const Token& t = peek();
        if (t.kind != kind) throw LineError{t.pos, what + ", found " + describe(t)};
        ++next_;
        return t;
    }

    Condition condition() {
        Condition c;
        const Token& var = expect(TokenKind::identifier, "expected variable name");
        c.variable = var.text;
        c.variable_pos = var.pos;
        expect(TokenKind::kw_is, "expected 'is'");
        const Token& term = expect(TokenKind::identifier, "expected term name");
        c.term = term.text;
        c.term_pos = term.pos;
        return c;
    }

    std::string_view line_;
    std::size_t line_no_;
    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

const LinguisticVariable* find(std::span<const LinguisticVariable> vars, std::string_view name) {
    for (const auto& v : vars)
        if (v.name() == name) return &v;
    return nullptr;
}

std::string join_terms(const LinguisticVariable& var) {
    std::string out;
    for (const auto& t : var.terms()) {
        if (!out.empty()) out += ", ";
        out += t.name;
    }
    return out;
}

}  // namespace

std::string to_string(const Diagnostic& d) {
    std::ostringstream os;
    os << d.pos.line << ':' << d.pos.column << ": " << d.message;
    return os.str();
}

RuleBase::RuleBase(std::vector<Rule> rules, std::string source)
    : rules_(std::move(rules)), source_(std::move(source)) {}

ParseResult parse_rules(std::string_view text) {
    ParseResult result;
    std::vector<Rule> rules;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        ++line_no;
        const std::string_view line = text.substr(start, stop - start);
        try {
            if (auto rule = LineParser(line, line_no).parse()) {
                const auto& ants = rule->antecedents;
                for (std::size_t i = 1; i < ants.size(); ++i) {
                    const auto dup = std::find_if(ants.begin(), ants.begin() + static_cast<long>(i),
                                                  [&](const Condition& c) {
                                                      return c.variable == ants[i].variable;
                                                  });
                    if (dup != ants.begin() + static_cast<long>(i)) {
                        result.diagnostics.push_back(
                            {Diagnostic::Kind::duplicate_antecedent, ants[i].variable_pos,
                             "variable '" + ants[i].variable +
                                 "' appears more than once in the antecedent"});
                    }
                }
                rules.push_back(std::move(*rule));
            }
        } catch (const LineError& e) {
            result.diagnostics.push_back({Diagnostic::Kind::syntax, e.pos, e.message});
        }
        if (stop == text.size()) break;
        start = stop + 1;
    }

    if (rules.empty() && result.diagnostics.empty())
        result.diagnostics.push_back({Diagnostic::Kind::empty_rule_base, {1, 1}, "no rules found"});
    if (result.diagnostics.empty()) result.rules.emplace(std::move(rules), std::string(text));
    return result;
}

RuleError::RuleError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
          std::string msg = "invalid rules";
          for (const auto& d : diagnostics) msg += "\n  " + to_string(d);
          return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

RuleBase parse_rules_or_throw(std::string_view text) {
    ParseResult r = parse_rules(text);
    if (!r) throw RuleError(std::move(r.diagnostics));
    return std::move(*r.rules);
}

std::vector<Diagnostic> validate_rules(const RuleBase& rules,
                                       std::span<const LinguisticVariable> inputs,
                                       std::span<const LinguisticVariable> outputs) {
    std::vector<Diagnostic> out;

    auto check = [&](const Condition& c, std::span<const LinguisticVariable> own,
                     std::span<const LinguisticVariable> other, const char* own_side,
                     const char* other_side) {
        const LinguisticVariable* var = find(own, c.variable);
        if (!var) {
            if (find(other, c.variable)) {
                out.push_back({Diagnostic::Kind::side_mismatch, c.variable_pos,
                               "variable '" + c.variable + "' is an " + other_side +
                                   " and cannot be used as an " + own_side});
            } else {
                out.push_back({Diagnostic::Kind::unknown_variable, c.variable_pos,
                               "unknown " + std::string(own_side) + " variable '" + c.variable + "'"});
            }
            return;
        }
        if (!var->term_index(c.term)) {
            out.push_back({Diagnostic::Kind::unknown_term, c.term_pos,
                           "variable '" + c.variable + "' has no term '" + c.term +
                               "' (known terms: " + join_terms(*var) + ")"});
        }
    };

    for (const Rule& rule : rules.rules()) {
        for (const Condition& c : rule.antecedents) check(c, inputs, outputs, "input", "output");
        check(rule.consequent, outputs, inputs, "output", "input");
    }
    return out;
}

std::string print_rules(const RuleBase& rules) {
    std::string out;
    for (const Rule& rule : rules.rules()) {
        out += "if ";
        for (std::size_t i = 0; i < rule.antecedents.size(); ++i) {
            if (i) out += " and ";
            out += rule.antecedents[i].variable + " is " + rule.antecedents[i].term;
        }
        out += " then " + rule.consequent.variable + " is " + rule.consequent.term + "\n";
    }
    return out;
}

}  // namespace c2b
