#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "poshom/analysis.hpp"
#include "poshom/covering.hpp"
#include "poshom/group.hpp"
#include "poshom/homology.hpp"
#include "poshom/poset.hpp"
#include "poshom/simplicial.hpp"

namespace poshom {

// Input files carry a top-level "kind": "poset" | "complex" | "group".
//   poset:   {"kind":"poset","dims":[..],"covers":[[child,parent],..],"labels":[..]?}
//   complex: {"kind":"complex","vertices":[..],"facets":[[..],..]}
//   group:   {"kind":"group","degree":n,"generators":[[images],..],"prime":p}
// A poset file may also embed a covering family under "family" using the
// serialized form below.
enum class InputKind { Poset, Complex, Group };

struct LoadedInput {
    InputKind kind;
    GradedPoset poset;                      // built for every kind
    std::optional<LocalCoveringFamily> embedded_family;  // poset files only
    std::optional<SimplicialComplex> complex;
    std::optional<PermutationGroup> group;
    std::optional<long> prime;              // group files
    std::vector<std::vector<int>> simplex_of;    // complex ingestion
    std::vector<Subgroup> subgroup_of;           // group ingestion
};

LoadedInput load_input(const std::string& path, const std::string& atom_order_text,
                       long element_cap);

GradedPoset poset_from_json(const nlohmann::json& j);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// Serialized family: element label -> {"K": [labels incl "0hat"], "eta": {label: label}}.
nlohmann::json family_to_json(const GradedPoset& poset, const LocalCoveringFamily& family);
LocalCoveringFamily family_from_json(const GradedPoset& poset, const nlohmann::json& j);

nlohmann::json homology_to_json(const HomologyResult& result);
nlohmann::json free_report_to_json(const GradedPoset& poset, const FreeObjectReport& report);
nlohmann::json size_report_to_json(const SizeReport& report);

// Atom order strings: "default" | "random:<seed>" | comma-separated atom ids.
AtomOrder parse_atom_order(const GradedPoset& poset, const std::string& text);
std::optional<std::vector<int>> parse_order_positions(const std::string& text);

}  // namespace poshom
