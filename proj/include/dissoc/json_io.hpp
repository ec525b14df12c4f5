#ifndef DISSOC_JSON_IO_HPP
#define DISSOC_JSON_IO_HPP

#include "dissoc/families.hpp"
#include "dissoc/verifier.hpp"

#include <json.hpp>

#include <string>

namespace dissoc {

// Graph JSON: {"n": <int>, "edges": [[i,j], ...]} with 0-based indices.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Potted JSON: {"k": <int>, "tree": <nested children arrays, root implicit>},
// e.g. {"k":6,"tree":[[[],[[]]]]} is the cycle C6 with u -> w and w -> {leaf, path-of-2}.
nlohmann::json potted_to_json(const PottedGraph& p);
PottedGraph potted_from_json(const nlohmann::json& j);

// Family descriptor JSON: {"id":"G2","k":6,"p4":0,"k13":0}; H carries "form".
nlohmann::json descriptor_to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const nlohmann::json& j, int order);

nlohmann::json theorem_reports_to_json(const std::vector<TheoremReport>& reports);
nlohmann::json structure_reports_to_json(const std::vector<StructureReport>& reports);
nlohmann::json table_reports_to_json(const std::vector<TableReport>& reports);
nlohmann::json inequality_report_to_json(const InequalityReport& report);
nlohmann::json small_case_reports_to_json(const std::vector<SmallCaseReport>& reports);

// Reads a whole file, throwing FormatError with the path on failure.
nlohmann::json load_json_file(const std::string& path);

} // namespace dissoc

#endif
