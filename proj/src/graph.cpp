#include "dissoc/graph.hpp"

namespace dissoc {

bool is_dissociation_set(const Graph& g, VertexSet s) {
    for (std::uint64_t m = s.bits; m; m &= m - 1) {
        int v = __builtin_ctzll(m);
        if ((g.neighbors(v) & s).count() > 1) return false;
    }
    return true;
}

std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, int v) {
    VertexSet open = g.neighbors(v);
    VertexSet closed = open;
    closed.add(v);
    return {open, closed};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    std::vector<int> to_original = s.to_vector(); // increasing
    std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < to_original.size(); ++i)
        to_new[static_cast<std::size_t>(to_original[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < to_original.size(); ++i) {
        int v = to_original[i];
        for (int u : (g.neighbors(v) & s).to_vector())
            if (u > v) edges.emplace_back(static_cast<int>(i), to_new[static_cast<std::size_t>(u)]);
    }
    return {Graph(static_cast<int>(to_original.size()), edges), std::move(to_original)};
}

std::vector<std::pair<VertexSet, Graph>> components(const Graph& g) {
    std::vector<std::pair<VertexSet, Graph>> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        int start = unseen.lowest();
        VertexSet comp;
        VertexSet frontier = VertexSet::of({start});
        while (!frontier.empty()) {
            comp = comp | frontier;
            VertexSet next;
            for (int v : frontier.to_vector()) next = next | g.neighbors(v);
            frontier = next - comp;
        }
        out.emplace_back(comp, induced_subgraph(g, comp).graph);
        unseen = unseen - comp;
    }
    return out;
}

Graph make_path(int n) {
    if (n < 1) throw DomainError("make_path: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw DomainError("make_cycle: n >= 3 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

} // namespace dissoc
