#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c2b/elicitation.hpp"
#include "c2b/inference.hpp"
#include "c2b/variable.hpp"

namespace c2b {

inline constexpr int catalog_schema_version = 1;

/// FIS section of a catalog: variables are referenced by name, rules are
/// embedded as text.
struct FisDefinition {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string rules;
    std::size_t defuzz_resolution = default_defuzz_resolution;

    friend bool operator==(const FisDefinition&, const FisDefinition&) = default;
};

struct Catalog {
    int schema_version = catalog_schema_version;
    std::string provenance;
    std::map<std::string, LinguisticVariable, std::less<>> variables;
    std::optional<FisDefinition> fis;

    /// Inserts or replaces by name.
    void put(LinguisticVariable var);
    const LinguisticVariable& at(std::string_view name) const;

    /// Throws SchemaError when the catalog has no FIS section or it names
    /// unknown variables; RuleError for bad rules.
    FuzzyInferenceSystem build_fis() const;

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Throws SchemaError with a JSON-pointer path on any schema violation.
Catalog parse_catalog(std::string_view json_text);

/// Canonical JSON: sorted keys, shortest round-trip number formatting.
std::string serialize_catalog(const Catalog& catalog);

Catalog load_catalog(const std::filesystem::path& path);
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);

/// CSV with a header row; columns `label,value` or just `value`.
/// Throws DatasetError naming the 1-based data row on bad numbers,
/// out-of-domain values, or an empty dataset.
TrainingSet parse_training_csv(std::string_view text, Domain domain);
TrainingSet load_training_csv(const std::filesystem::path& path, Domain domain);

/// Whole file as a string; throws c2b::Error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace c2b
