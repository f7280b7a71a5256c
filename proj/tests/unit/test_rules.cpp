#include <doctest.h>

#include <random>
#include <string>

#include "c2b/fixtures.hpp"
#include "c2b/rules.hpp"

using namespace c2b;

namespace {

std::vector<LinguisticVariable> side(const Catalog& cat, const std::vector<std::string>& names) {
    std::vector<LinguisticVariable> out;
    for (const auto& n : names) out.push_back(cat.at(n));
    return out;
}

}  // namespace

TEST_CASE("parse single-antecedent rule") {
    const ParseResult r = parse_rules("if C is LC1 then P is close");
    REQUIRE(r);
    REQUIRE(r.rules->size() == 1);
    const Rule& rule = r.rules->rules()[0];
    REQUIRE(rule.antecedents.size() == 1);
    CHECK(rule.antecedents[0].variable == "C");
    CHECK(rule.antecedents[0].term == "LC1");
    CHECK(rule.consequent.variable == "P");
    CHECK(rule.consequent.term == "close");
    CHECK(rule.consequent.term_pos == SourcePos{1, 23});
}

TEST_CASE("parse conjunctive rule") {
    const ParseResult r = parse_rules("if C is LC2 and C2 is male then P is far");
    REQUIRE(r);
    const Rule& rule = r.rules->rules()[0];
    REQUIRE(rule.antecedents.size() == 2);
    CHECK(rule.antecedents[1].variable == "C2");
    CHECK(rule.antecedents[1].term == "male");
}

TEST_CASE("missing term is a syntax error at the offending token") {
    const ParseResult r = parse_rules("if C is then P is close");
    CHECK_FALSE(r);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == Diagnostic::Kind::syntax);
    CHECK(r.diagnostics[0].pos == SourcePos{1, 9});
    CHECK(r.diagnostics[0].message == "expected term name, found 'then'");
}

TEST_CASE("syntax errors are collected per line") {
    const ParseResult r = parse_rules(
        "# rules\n"
        "\n"
        "if C is LC1 then P is close\n"
        "if C is LC2 then P is\n"
        "if C is LC2 P is far\n"
        "when C is LC1 then P is close\n"
        "if C is LC1 then P is close extra\n"
        "if C is LC1 then P is cl@se\n");
    CHECK_FALSE(r);
    REQUIRE(r.diagnostics.size() == 5);
    CHECK(to_string(r.diagnostics[0]) == "4:22: expected term name, found end of line");
    CHECK(to_string(r.diagnostics[1]) == "5:13: expected 'and' or 'then', found 'P'");
    CHECK(to_string(r.diagnostics[2]) == "6:1: expected 'if', found 'when'");
    CHECK(to_string(r.diagnostics[3]) == "7:29: expected end of line, found 'extra'");
    CHECK(to_string(r.diagnostics[4]) == "8:25: unexpected character '@'");
}

TEST_CASE("keywords are case-insensitive, identifiers are not") {
    const ParseResult r = parse_rules("IF c Is lc1 AND C is LC1 THEN p iS Close   # trailing comment\r\n");
    REQUIRE(r);
    const Rule& rule = r.rules->rules()[0];
    CHECK(rule.antecedents[0].variable == "c");
    CHECK(rule.antecedents[1].variable == "C");
    CHECK(rule.consequent.term == "Close");
}

TEST_CASE("duplicate antecedent variables are rejected") {
    const ParseResult r = parse_rules("if C is LC1 and C is LC2 then P is far");
    CHECK_FALSE(r);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == Diagnostic::Kind::duplicate_antecedent);
    CHECK(r.diagnostics[0].pos == SourcePos{1, 17});
}

TEST_CASE("empty text has no rules") {
    for (const char* text : {"", "\n\n", "# only a comment\n"}) {
        const ParseResult r = parse_rules(text);
        CHECK_FALSE(r);
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].kind == Diagnostic::Kind::empty_rule_base);
    }
    CHECK_THROWS_AS(parse_rules_or_throw(""), RuleError);
}

TEST_CASE("identifiers start with a letter") {
    const ParseResult r = parse_rules("if 2C is LC1 then P is close");
    CHECK_FALSE(r);
    CHECK(r.diagnostics[0].pos == SourcePos{1, 4});
}

TEST_CASE("validate against the case-study catalogs") {
    const Catalog one = fixtures::case_catalog(1);
    const auto in1 = side(one, {"C"});
    const auto out1 = side(one, {"P"});
    CHECK(validate_rules(parse_rules_or_throw(one.fis->rules), in1, out1).empty());

    const Catalog two = fixtures::case_catalog(2);
    CHECK(validate_rules(parse_rules_or_throw(two.fis->rules), side(two, {"C", "C2"}), side(two, {"P"})).empty());

    SUBCASE("unknown term lists the known ones") {
        const auto d = validate_rules(parse_rules_or_throw("if C is LC3 then P is close"), in1, out1);
        REQUIRE(d.size() == 1);
        CHECK(d[0].kind == Diagnostic::Kind::unknown_term);
        CHECK(d[0].pos == SourcePos{1, 9});
        CHECK(d[0].message.find("LC1, LC2") != std::string::npos);
    }
    SUBCASE("consequent on an input variable") {
        const auto d = validate_rules(parse_rules_or_throw("if C is LC1 then C is LC2"), in1, out1);
        REQUIRE(d.size() == 1);
        CHECK(d[0].kind == Diagnostic::Kind::side_mismatch);
    }
    SUBCASE("all diagnostics are reported") {
        const auto d = validate_rules(parse_rules_or_throw("if Q is x and P is close then Z is far\n"
                                                           "if C is LC9 then P is huge\n"),
                                      in1, out1);
        REQUIRE(d.size() == 5);
        CHECK(d[0].kind == Diagnostic::Kind::unknown_variable);
        CHECK(d[1].kind == Diagnostic::Kind::side_mismatch);
        CHECK(d[2].kind == Diagnostic::Kind::unknown_variable);
        CHECK(d[3].kind == Diagnostic::Kind::unknown_term);
        CHECK(d[4].kind == Diagnostic::Kind::unknown_term);
    }
}

TEST_CASE("property: print then parse is stable") {
    std::mt19937_64 rng(99);
    auto pick = [&](std::initializer_list<const char*> xs) {
        return *(xs.begin() + std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng));
    };
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < n; ++i) {
            text += pick({"if", "IF", "If"});
            text += pick({" ", "  ", "\t"});
            const int ants = std::uniform_int_distribution<int>(1, 3)(rng);
            const char* vars[] = {"A", "B1", "c_x"};
            for (int a = 0; a < ants; ++a) {
                if (a) text += pick({" and ", " AND "});
                text += std::string(vars[a]) + " is " + pick({"lo", "Mid", "hi_2"});
            }
            text += std::string(" then ") + pick({"P", "Q"}) + " is " + pick({"near", "far"});
            text += pick({"\n", "  # note\n", "\r\n"});
            if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) text += "\n";
        }
        const RuleBase first = parse_rules_or_throw(text);
        const std::string printed = print_rules(first);
        const RuleBase second = parse_rules_or_throw(printed);
        REQUIRE(print_rules(second) == printed);
        REQUIRE(second.size() == first.size());
    }
}

TEST_CASE("property: parsing is total and positions point into the source") {
    std::mt19937_64 rng(7);
    const std::string alphabet = "ifthenandisICP12_ #\n\t@,.-xyz";
    const std::vector<std::string> words = {"if", "then", "and", "is", "C", "LC1", "P", "close", "\n", " "};
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        const int len = std::uniform_int_distribution<int>(0, 60)(rng);
        for (int i = 0; i < len; ++i) {
            if (rng() % 2)
                text += alphabet[rng() % alphabet.size()];
            else
                text += words[rng() % words.size()] + " ";
        }
        ParseResult r;
        REQUIRE_NOTHROW(r = parse_rules(text));
        REQUIRE(r.rules.has_value() != !r.diagnostics.empty());

        std::vector<std::size_t> line_lengths;
        std::size_t cur = 0;
        for (char ch : text) {
            if (ch == '\n') {
                line_lengths.push_back(cur);
                cur = 0;
            } else {
                ++cur;
            }
        }
        line_lengths.push_back(cur);
        for (const Diagnostic& d : r.diagnostics) {
            REQUIRE(d.pos.line >= 1);
            REQUIRE(d.pos.line <= line_lengths.size());
            REQUIRE(d.pos.column >= 1);
            REQUIRE(d.pos.column <= line_lengths[d.pos.line - 1] + 1);
        }
    }
}
