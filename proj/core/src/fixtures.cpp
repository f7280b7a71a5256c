#include "c2b/fixtures.hpp"

#include <stdexcept>

namespace c2b::embedded {
std::string_view hofstede_csv();
std::string_view case_catalog(int n);
}  // namespace c2b::embedded

namespace c2b::fixtures {

std::string_view hofstede_csv() { return embedded::hofstede_csv(); }

TrainingSet hofstede_training_set() {
    return parse_training_csv(hofstede_csv(), Domain{0.0, 100.0});
}

std::string_view case_catalog_json(int case_id) {
    if (case_id != 1 && case_id != 2)
        throw std::out_of_range("unknown case study " + std::to_string(case_id) + " (valid: 1, 2)");
    return embedded::case_catalog(case_id);
}

Catalog case_catalog(int case_id) { return parse_catalog(case_catalog_json(case_id)); }

std::vector<Anchor> case_anchors(int case_id) {
    switch (case_id) {
        case 1:
            return {{{{"C", 38.0}}, 69.9, "c=38 (Arab countries)"},
                    {{{"C", 67.0}}, 100.7, "c=67 (Germany)"}};
        case 2:
            return {{{{"C", 38.0}, {"C2", 0.0}}, 63.63, "[38,0] Arab woman"},
                    {{{"C", 67.0}, {"C2", 0.0}}, 84.7, "[67,0] German woman"},
                    {{{"C", 38.0}, {"C2", 1.0}}, 87.51, "[38,1] Arab man"},
                    {{{"C", 67.0}, {"C2", 1.0}}, 109.34, "[67,1] German man"}};
        default:
            throw std::out_of_range("unknown case study " + std::to_string(case_id) + " (valid: 1, 2)");
    }
}

}  // namespace c2b::fixtures
