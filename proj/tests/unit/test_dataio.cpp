#include <doctest.h>

#include <filesystem>
#include <json.hpp>

#include "c2b/error.hpp"
#include "c2b/fixtures.hpp"
#include "generators.hpp"

using namespace c2b;
using nlohmann::json;

namespace {

std::string schema_error_path(const std::string& text) {
    try {
        parse_catalog(text);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<no error>";
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "c2b_dataio_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("catalog round trip") {
    for (int id : {1, 2}) {
        const Catalog cat = fixtures::case_catalog(id);
        const std::string text = serialize_catalog(cat);
        CHECK(parse_catalog(text) == cat);
        CHECK(serialize_catalog(parse_catalog(text)) == text);
        CHECK(text == fixtures::case_catalog_json(id));
    }
}

TEST_CASE("saving twice gives identical bytes") {
    const Catalog cat = fixtures::case_catalog(2);
    const auto a = scratch("a.json");
    const auto b = scratch("b.json");
    save_catalog(cat, a);
    save_catalog(load_catalog(a), b);
    CHECK(read_text_file(a) == read_text_file(b));
    CHECK(load_catalog(b) == cat);
}

TEST_CASE("bundled case studies") {
    const Catalog two = fixtures::case_catalog(2);
    CHECK(two.at("P").term_names() == std::vector<std::string>{"close", "medium", "far"});
    CHECK(two.at("C2").kind() == VariableKind::nominal);
    CHECK(two.fis->rules.find("then P is medium") != std::string::npos);
    CHECK(fixtures::case_catalog(1).at("P").term_names() == std::vector<std::string>{"close", "far"});
    CHECK_THROWS_AS(fixtures::case_catalog(3), std::out_of_range);
}

TEST_CASE("schema errors carry the offending path") {
    json doc = json::parse(fixtures::case_catalog_json(2));

    SUBCASE("trapezoid breakpoints out of order") {
        auto& vars = doc["variables"];
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i]["name"] == "P") {
                vars[i]["terms"][0]["params"]["a"] = 200.0;
                CHECK(schema_error_path(doc.dump()) == "/variables/" + std::to_string(i) + "/terms/0/params/b");
            }
    }
    SUBCASE("unknown membership type") {
        doc["variables"][0]["terms"][0]["type"] = "bell";
        CHECK(schema_error_path(doc.dump()) == "/variables/0/terms/0/type");
    }
    SUBCASE("version mismatch") {
        doc["schema_version"] = 2;
        CHECK(schema_error_path(doc.dump()) == "/schema_version");
    }
    SUBCASE("missing field") {
        doc["variables"][0].erase("domain");
        CHECK(schema_error_path(doc.dump()) == "/variables/0/domain");
    }
    SUBCASE("not JSON") {
        CHECK(schema_error_path("{\"schema_version\": 1,") == "");
    }
    SUBCASE("bad defuzzification resolution") {
        doc["fis"]["defuzz_resolution"] = 1;
        CHECK(schema_error_path(doc.dump()) == "/fis/defuzz_resolution");
    }
}

TEST_CASE("individualism dataset") {
    const TrainingSet data = fixtures::hofstede_training_set();
    REQUIRE(data.values.size() == 110);
    REQUIRE(data.labels.size() == 110);
    const auto min = std::min_element(data.values.begin(), data.values.end());
    CHECK(*min == 6.0);
    CHECK(data.labels[static_cast<std::size_t>(min - data.values.begin())] == "Guatemala");
    const auto ecuador = std::find(data.labels.begin(), data.labels.end(), "Ecuador");
    REQUIRE(ecuador != data.labels.end());
    CHECK(data.values[static_cast<std::size_t>(ecuador - data.labels.begin())] == 8.0);
}

TEST_CASE("CSV parsing") {
    const Domain d{0, 100};
    SUBCASE("value column only") {
        const auto t = parse_training_csv("value\n1\n2.5\n", d);
        CHECK(t.values == std::vector<double>{1, 2.5});
        CHECK(t.labels.empty());
    }
    SUBCASE("quoted labels and CRLF") {
        const auto t = parse_training_csv("label,value\r\n\"Korea, South\",18\r\nX,3\r\n", d);
        CHECK(t.labels == std::vector<std::string>{"Korea, South", "X"});
        CHECK(t.values == std::vector<double>{18, 3});
    }
    SUBCASE("errors") {
        CHECK_THROWS_WITH_AS(parse_training_csv("", d), "empty dataset", DatasetError);
        CHECK_THROWS_WITH_AS(parse_training_csv("label,value\n", d), "empty dataset", DatasetError);
        CHECK_THROWS_WITH_AS(parse_training_csv("label,value\nX,abc\n", d), "line 2: non-numeric value 'abc'",
                             DatasetError);
        CHECK_THROWS_AS(parse_training_csv("label,value\nX,101\n", d), DatasetError);
        CHECK_THROWS_AS(parse_training_csv("label,score\nX,1\n", d), DatasetError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_training_csv(scratch("does-not-exist.csv"), d), Error);
    }
}

TEST_CASE("property: random catalogs round-trip at full precision") {
    testing::Gen gen(51);
    for (int trial = 0; trial < 200; ++trial) {
        Catalog cat;
        cat.provenance = "trial " + std::to_string(trial);
        const int nvars = gen.integer(1, 4);
        for (int v = 0; v < nvars; ++v) {
            const double lo = gen.uniform(-1e3, 1e3);
            const Domain dom{lo, lo + gen.uniform(1e-3, 1e3)};
            const bool nominal = gen.integer(0, 3) == 0;
            std::vector<Term> terms;
            const int nterms = gen.integer(1, 4);
            for (int t = 0; t < nterms; ++t) {
                MembershipFunction mf;
                if (nominal) {
                    mf = gen.crisp(3);
                } else if (gen.integer(0, 1) == 0) {
                    mf = gen.trapezoid(dom);
                } else {
                    Gauss2 g = gen.gauss2(dom);
                    g.gamma1 = std::abs(g.gamma1) + 1e-6;
                    g.gamma2 = std::abs(g.gamma2) + 1e-6;
                    mf = g;
                }
                terms.push_back({"T" + std::to_string(t), mf});
            }
            if (nominal) {
                cat.put(LinguisticVariable("V" + std::to_string(v), VariableKind::nominal, Domain{0, 3},
                                           std::move(terms), {0, 1, 2, 3}));
            } else {
                cat.put(LinguisticVariable("V" + std::to_string(v), VariableKind::ratio, dom, std::move(terms)));
            }
        }
        const std::string text = serialize_catalog(cat);
        const Catalog back = parse_catalog(text);
        REQUIRE(back == cat);
        REQUIRE(serialize_catalog(back) == text);
    }
}
