#pragma once

#include <string_view>

#include "c2b/dataio.hpp"

namespace c2b::fixtures {

/// Allowed deviation from a published case-study distance, in cm.
inline constexpr double anchor_tolerance_cm = 5.0;

/// Published anchor of the case studies, distances in cm.
struct Anchor {
    Profile input;
    double expected;
    const char* label;
};

/// Individualism scores of 110 countries (label,value CSV).
std::string_view hofstede_csv();
TrainingSet hofstede_training_set();

/// Catalog JSON of case study 1 or 2. Throws std::out_of_range otherwise.
std::string_view case_catalog_json(int case_id);
Catalog case_catalog(int case_id);

/// Anchors of case study 1 or 2.
std::vector<Anchor> case_anchors(int case_id);

}  // namespace c2b::fixtures
