#include "dissoc/json_io.hpp"

#include <fstream>

namespace dissoc {

using nlohmann::json;

nlohmann::json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return json{{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("graph: object expected");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw FormatError("graph: field 'n' must be an integer");
    if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("graph: field 'edges' must be an array");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("graph: field 'edges' entries must be [i,j] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, edges);
    } catch (const DomainError& err) {
        throw FormatError(std::string("graph: ") + err.what());
    }
}

namespace {

json tree_children_to_json(const RootedTree& t) {
    json arr = json::array();
    for (const auto& c : t.children) arr.push_back(tree_children_to_json(c));
    return arr;
}

RootedTree tree_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("potted: field 'tree' must be nested arrays");
    RootedTree t;
    for (const auto& c : j) t.children.push_back(tree_from_json(c));
    return t;
}

} // namespace

nlohmann::json potted_to_json(const PottedGraph& p) {
    return json{{"k", p.cycle_len}, {"tree", tree_children_to_json(p.attach)}};
}

PottedGraph potted_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("potted: object expected");
    if (!j.contains("k") || !j["k"].is_number_integer()) throw FormatError("potted: field 'k' must be an integer");
    if (!j.contains("tree")) throw FormatError("potted: field 'tree' missing");
    PottedGraph p;
    p.cycle_len = j["k"].get<int>();
    p.attach = tree_from_json(j["tree"]);
    try {
        p.validate();
    } catch (const DomainError& err) {
        throw FormatError(std::string("potted: ") + err.what());
    }
    return p;
}

nlohmann::json descriptor_to_json(const FamilyDescriptor& d) {
    json j{{"id", family_name(d.id)}, {"p4", d.p4}, {"k13", d.k13}, {"n", d.order}};
    if (is_potted_family(d.id)) j["k"] = d.k;
    if (d.id == FamilyId::H) j["form"] = d.variant == 0 ? "P3" : "P2P2";
    return j;
}

FamilyDescriptor descriptor_from_json(const json& j, int order) {
    if (!j.is_object()) throw FormatError("descriptor: object expected");
    if (!j.contains("id") || !j["id"].is_string()) throw FormatError("descriptor: field 'id' must be a string");
    FamilyDescriptor d;
    d.id = family_from_name(j["id"].get<std::string>());
    d.k = j.value("k", 0);
    d.p4 = j.value("p4", 0);
    d.k13 = j.value("k13", 0);
    d.order = j.value("n", order);
    if (j.contains("form")) {
        std::string form = j["form"].get<std::string>();
        if (form == "P3") d.variant = 0;
        else if (form == "P2P2") d.variant = 1;
        else throw FormatError("descriptor: field 'form' must be 'P3' or 'P2P2'");
    }
    return d;
}

nlohmann::json theorem_reports_to_json(const std::vector<TheoremReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json cands = json::array();
        for (const auto& c : r.bound.candidates) cands.push_back({{"name", c.name}, {"value", c.value}});
        json fams = json::array();
        for (FamilyId id : r.bound.families) fams.push_back(family_name(id));
        arr.push_back({{"n", r.n},
                       {"k", r.k},
                       {"bound", r.bound.value},
                       {"candidates", cands},
                       {"families", fams},
                       {"observed", r.observed_max},
                       {"argmax_codes", r.argmax_codes},
                       {"predicted_codes", r.predicted_codes},
                       {"verdict", verdict_name(r.verdict)}});
    }
    return arr;
}

nlohmann::json structure_reports_to_json(const std::vector<StructureReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back({{"k", r.k},
                       {"orders", r.orders},
                       {"observed", r.observed_max},
                       {"argmax_codes", r.argmax_codes},
                       {"predicted_codes", r.predicted_codes},
                       {"match", r.match}});
    return arr;
}

namespace {

std::string cell_expect(CellKind kind, long long value) {
    switch (kind) {
        case CellKind::Exact: return "=" + std::to_string(value);
        case CellKind::Less: return "<" + std::to_string(value);
        case CellKind::AtMost: return "<=" + std::to_string(value);
    }
    return "?";
}

} // namespace

nlohmann::json table_reports_to_json(const std::vector<TableReport>& reports) {
    json arr = json::array();
    for (const auto& rep : reports) {
        json instances = json::array();
        for (const auto& inst : rep.instances) {
            json cells = json::array();
            for (const auto& c : inst.cells)
                cells.push_back({{"vertex", c.label},
                                 {"expected_v", cell_expect(c.kind_v, c.expected_v)},
                                 {"observed_v", c.observed_v},
                                 {"expected_nv", cell_expect(c.kind_nv, c.expected_nv)},
                                 {"observed_nv", c.observed_nv},
                                 {"pass", c.pass}});
            instances.push_back({{"n", inst.n}, {"shape", inst.shape}, {"cells", cells}, {"pass", inst.all_pass}});
        }
        arr.push_back({{"table", rep.table_id}, {"instances", instances}, {"pass", rep.all_pass}});
    }
    return arr;
}

nlohmann::json inequality_report_to_json(const InequalityReport& report) {
    return json{{"instances_checked", report.instances_checked},
                {"counterexamples", report.counterexamples},
                {"equality_mismatches", report.equality_mismatches},
                {"pass", report.all_pass}};
}

nlohmann::json small_case_reports_to_json(const std::vector<SmallCaseReport>& reports) {
    json arr = json::array();
    for (const auto& rep : reports) {
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"n", row.n}, {"check", row.check}, {"pass", row.pass}, {"detail", row.detail}});
        arr.push_back({{"k", rep.k}, {"rows", rows}, {"pass", rep.all_pass}});
    }
    return arr;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw FormatError(path + ": " + err.what());
    }
    return j;
}

} // namespace dissoc
