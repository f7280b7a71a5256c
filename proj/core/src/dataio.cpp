#include "c2b/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "c2b/error.hpp"

namespace c2b {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string child(const std::string& path, std::string_view key) {
    return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(child(path, key), "missing required field");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    return j.get<double>();
}

std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<int>();
}

MembershipFunction parse_mf(const json& term, const std::string& path) {
    const std::string type = string(require(term, "type", path), child(path, "type"));
    if (type == "trapezoid") {
        const std::string pp = child(path, "params");
        const json& p = require(term, "params", path);
        Trapezoid t{number(require(p, "a", pp), child(pp, "a")),
                    number(require(p, "b", pp), child(pp, "b")),
                    number(require(p, "c", pp), child(pp, "c")),
                    number(require(p, "d", pp), child(pp, "d"))};
        if (!(t.a <= t.b)) throw SchemaError(child(pp, "b"), "trapezoid requires a <= b");
        if (!(t.b <= t.c)) throw SchemaError(child(pp, "c"), "trapezoid requires b <= c");
        if (!(t.c <= t.d)) throw SchemaError(child(pp, "d"), "trapezoid requires c <= d");
        return t;
    }
    if (type == "gauss2") {
        const std::string pp = child(path, "params");
        const json& p = require(term, "params", path);
        auto get = [&](const char* key) { return number(require(p, key, pp), child(pp, key)); };
        Gauss2 g{get("alpha1"), get("beta1"), get("gamma1"), get("alpha2"), get("beta2"), get("gamma2")};
        if (!(g.gamma1 > 0.0)) throw SchemaError(child(pp, "gamma1"), "gamma must be positive");
        if (!(g.gamma2 > 0.0)) throw SchemaError(child(pp, "gamma2"), "gamma must be positive");
        return g;
    }
    if (type == "crisp") {
        const std::string lp = child(path, "levels");
        const json& levels = array(require(term, "levels", path), lp);
        CrispLabel label;
        for (std::size_t i = 0; i < levels.size(); ++i) label.levels.push_back(integer(levels[i], child(lp, i)));
        std::sort(label.levels.begin(), label.levels.end());
        label.levels.erase(std::unique(label.levels.begin(), label.levels.end()), label.levels.end());
        return label;
    }
    throw SchemaError(child(path, "type"), "unknown membership function type '" + type + "'");
}

LinguisticVariable parse_variable(const json& v, const std::string& path) {
    std::string name = string(require(v, "name", path), child(path, "name"));
    const std::string kind_text = string(require(v, "kind", path), child(path, "kind"));
    const auto kind = parse_variable_kind(kind_text);
    if (!kind) throw SchemaError(child(path, "kind"), "unknown variable kind '" + kind_text + "'");

    const std::string dp = child(path, "domain");
    const json& dom = array(require(v, "domain", path), dp);
    if (dom.size() != 2) throw SchemaError(dp, "domain must be [lo, hi]");
    const Domain domain{number(dom[0], child(dp, 0)), number(dom[1], child(dp, 1))};

    std::vector<int> codes;
    if (const auto it = v.find("codes"); it != v.end()) {
        const std::string cp = child(path, "codes");
        for (std::size_t i = 0; i < array(*it, cp).size(); ++i) codes.push_back(integer((*it)[i], child(cp, i)));
    }

    const std::string tp = child(path, "terms");
    const json& terms_json = array(require(v, "terms", path), tp);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < terms_json.size(); ++i) {
        const std::string p = child(tp, i);
        terms.push_back({string(require(terms_json[i], "name", p), child(p, "name")),
                         parse_mf(terms_json[i], p)});
    }

    try {
        return LinguisticVariable(std::move(name), *kind, domain, std::move(terms), std::move(codes));
    } catch (const InvalidDefinition& e) {
        throw SchemaError(path, e.what());
    }
}

json mf_to_json(const MembershipFunction& mf) {
    return std::visit(
        overloaded{
            [](const Trapezoid& t) {
                return json{{"type", "trapezoid"},
                            {"params", {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}}}};
            },
            [](const Gauss2& g) {
                return json{{"type", "gauss2"},
                            {"params",
                             {{"alpha1", g.alpha1},
                              {"beta1", g.beta1},
                              {"gamma1", g.gamma1},
                              {"alpha2", g.alpha2},
                              {"beta2", g.beta2},
                              {"gamma2", g.gamma2}}}};
            },
            [](const CrispLabel& l) { return json{{"type", "crisp"}, {"levels", l.levels}}; },
        },
        mf);
}

json variable_to_json(const LinguisticVariable& v) {
    json terms = json::array();
    for (const Term& t : v.terms()) {
        json jt = mf_to_json(t.mf);
        jt["name"] = t.name;
        terms.push_back(std::move(jt));
    }
    json out{{"name", v.name()},
             {"kind", to_string(v.kind())},
             {"domain", {v.domain().lo, v.domain().hi}},
             {"terms", std::move(terms)}};
    if (!v.codes().empty()) out["codes"] = v.codes();
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits one CSV record; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.emplace_back(trim(cur));
    return fields;
}

}  // namespace

void Catalog::put(LinguisticVariable var) {
    const std::string name = var.name();
    variables.insert_or_assign(name, std::move(var));
}

const LinguisticVariable& Catalog::at(std::string_view name) const {
    const auto it = variables.find(name);
    if (it == variables.end()) throw SchemaError("/variables", "no variable named '" + std::string(name) + "'");
    return it->second;
}

FuzzyInferenceSystem Catalog::build_fis() const {
    if (!fis) throw SchemaError("/fis", "catalog has no inference system");
    auto collect = [&](const std::vector<std::string>& names, const char* side) {
        std::vector<LinguisticVariable> vars;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto it = variables.find(names[i]);
            if (it == variables.end())
                throw SchemaError("/fis/" + std::string(side) + "/" + std::to_string(i),
                                  "unknown variable '" + names[i] + "'");
            vars.push_back(it->second);
        }
        return vars;
    };
    return FuzzyInferenceSystem(collect(fis->inputs, "inputs"), collect(fis->outputs, "outputs"),
                                parse_rules_or_throw(fis->rules), fis->defuzz_resolution);
}

Catalog parse_catalog(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("", "expected an object");

    Catalog cat;
    const json& version = require(doc, "schema_version", "");
    if (!version.is_number_integer()) throw SchemaError("/schema_version", "expected an integer");
    cat.schema_version = version.get<int>();
    if (cat.schema_version != catalog_schema_version)
        throw SchemaError("/schema_version", "unsupported schema version " +
                                                 std::to_string(cat.schema_version) + " (expected " +
                                                 std::to_string(catalog_schema_version) + ")");

    if (const auto it = doc.find("provenance"); it != doc.end()) cat.provenance = string(*it, "/provenance");

    const json& vars = array(require(doc, "variables", ""), "/variables");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string path = child(std::string("/variables"), i);
        LinguisticVariable v = parse_variable(vars[i], path);
        if (cat.variables.contains(v.name()))
            throw SchemaError(child(path, "name"), "duplicate variable '" + v.name() + "'");
        cat.put(std::move(v));
    }

    if (const auto it = doc.find("fis"); it != doc.end()) {
        const json& f = *it;
        FisDefinition def;
        auto names = [&](const char* key) {
            const std::string p = std::string("/fis/") + key;
            const json& a = array(require(f, key, "/fis"), p);
            std::vector<std::string> out;
            for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string(a[i], child(p, i)));
            return out;
        };
        def.inputs = names("inputs");
        def.outputs = names("outputs");
        def.rules = string(require(f, "rules", "/fis"), "/fis/rules");
        if (const auto r = f.find("defuzz_resolution"); r != f.end()) {
            if (!r->is_number_unsigned() || r->get<std::size_t>() < 2)
                throw SchemaError("/fis/defuzz_resolution", "expected an integer >= 2");
            def.defuzz_resolution = r->get<std::size_t>();
        }
        cat.fis = std::move(def);
    }
    return cat;
}

std::string serialize_catalog(const Catalog& catalog) {
    json doc;
    doc["schema_version"] = catalog.schema_version;
    if (!catalog.provenance.empty()) doc["provenance"] = catalog.provenance;
    json vars = json::array();
    for (const auto& [name, var] : catalog.variables) vars.push_back(variable_to_json(var));
    doc["variables"] = std::move(vars);
    if (catalog.fis) {
        doc["fis"] = {{"inputs", catalog.fis->inputs},
                      {"outputs", catalog.fis->outputs},
                      {"rules", catalog.fis->rules},
                      {"defuzz_resolution", catalog.fis->defuzz_resolution}};
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Catalog load_catalog(const std::filesystem::path& path) {
    return parse_catalog(read_text_file(path));
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    const std::string text = serialize_catalog(catalog);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

TrainingSet parse_training_csv(std::string_view text, Domain domain) {
    TrainingSet set;
    set.domain = domain;

    std::optional<std::size_t> value_col;
    std::optional<std::size_t> label_col;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        const std::string_view line = trim(text.substr(start, stop - start));
        start = stop + 1;
        ++line_no;
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_csv(line);
        if (!value_col) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == "value") value_col = i;
                if (fields[i] == "label") label_col = i;
            }
            if (!value_col) throw DatasetError("line " + std::to_string(line_no) + ": header has no 'value' column");
            continue;
        }

        const std::string where = "line " + std::to_string(line_no);
        if (fields.size() <= *value_col) throw DatasetError(where + ": missing value field");
        const std::string& field = fields[*value_col];
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v))
            throw DatasetError(where + ": non-numeric value '" + field + "'");
        if (!domain.contains(v)) {
            std::ostringstream os;
            os << where << ": value " << field << " outside [" << domain.lo << ", " << domain.hi << "]";
            throw DatasetError(os.str());
        }
        set.values.push_back(v);
        if (label_col) set.labels.push_back(*label_col < fields.size() ? fields[*label_col] : std::string());
    }

    if (set.values.empty()) throw DatasetError("empty dataset");
    return set;
}

TrainingSet load_training_csv(const std::filesystem::path& path, Domain domain) {
    return parse_training_csv(read_text_file(path), domain);
}

}  // namespace c2b
