#ifndef DISSOC_TESTS_SUBSET_ORACLE_HPP
#define DISSOC_TESTS_SUBSET_ORACLE_HPP

// Plain 2^n subset-scan oracle plus exhaustive small-graph generators.
// Deliberately independent of the branch-and-bound implementation under
// test: everything here is the naive definition, evaluated directly.

#include "dissoc/graph.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/rooted_tree.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace dissoc::testing {

inline constexpr int kSubsetScanCap = 20;

struct SubsetResult {
    int diss = 0;
    long long count = 0;
    std::vector<VertexSet> sets;
};

inline SubsetResult subset_solve(const Graph& g) {
    if (g.order() > kSubsetScanCap) throw CapExceeded("subset_solve: order above 2^n scan cap");
    SubsetResult r;
    r.diss = -1;
    const std::uint64_t limit = 1ULL << g.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet s(mask);
        if (!is_dissociation_set(g, s)) continue;
        int size = s.count();
        if (size > r.diss) {
            r.diss = size;
            r.count = 0;
            r.sets.clear();
        }
        if (size == r.diss) {
            ++r.count;
            r.sets.push_back(s);
        }
    }
    return r;
}

inline ClassifiedCounts subset_classify(const Graph& g, int v) {
    SubsetResult r = subset_solve(g);
    ClassifiedCounts c;
    for (VertexSet s : r.sets) {
        if (!s.contains(v))
            ++c.minus;
        else if ((g.neighbors(v) & s).empty())
            ++c.zero;
        else
            ++c.one;
    }
    return c;
}

inline long long subset_restricted(const Graph& t, VertexSet removed) {
    VertexSet keep = t.vertices() - removed;
    if (keep.empty()) return 0;
    SubsetResult whole = subset_solve(t);
    SubsetResult sub = subset_solve(induced_subgraph(t, keep).graph);
    return sub.diss == whole.diss ? sub.count : 0;
}

// Every labeled graph on n vertices (2^(n(n-1)/2) of them; keep n small).
inline std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1ULL) edges.push_back(slots[b]);
        out.push_back(Graph(n, edges));
    }
    return out;
}

// One representative per isomorphism class of free trees of order n.
inline std::vector<Graph> all_free_trees(int n) {
    std::map<std::string, Graph> by_code;
    for (const auto& rooted : enumerate_rooted_trees(n)) {
        Graph g = flatten_rooted(rooted);
        by_code.emplace(free_tree_code(g), g);
    }
    std::vector<Graph> out;
    for (auto& [code, g] : by_code) out.push_back(std::move(g));
    return out;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& p : parts) {
        for (auto [a, b] : p.edges()) edges.emplace_back(n + a, n + b);
        n += p.order();
    }
    return Graph(n, edges);
}

// Forests of total order n as multisets of free trees (each component order
// >= 1); result graphs have components laid out in generation order.
inline std::vector<std::vector<Graph>> all_forests(int n) {
    std::vector<std::vector<Graph>> trees_by_order(static_cast<std::size_t>(n) + 1);
    for (int o = 1; o <= n; ++o) trees_by_order[static_cast<std::size_t>(o)] = all_free_trees(o);

    std::vector<std::vector<Graph>> out;
    std::vector<Graph> acc;
    // Non-increasing (order, index) sequences; each multiset appears once.
    auto rec = [&](auto&& self, int remaining, int max_order, int max_index) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (int o = std::min(remaining, max_order); o >= 1; --o) {
            const auto& pool = trees_by_order[static_cast<std::size_t>(o)];
            int hi = (o == max_order) ? max_index : static_cast<int>(pool.size()) - 1;
            for (int i = hi; i >= 0; --i) {
                acc.push_back(pool[static_cast<std::size_t>(i)]);
                self(self, remaining - o, o, i);
                acc.pop_back();
            }
        }
    };
    rec(rec, n, n, n >= 1 ? static_cast<int>(trees_by_order[static_cast<std::size_t>(n)].size()) - 1 : -1);
    return out;
}

} // namespace dissoc::testing

#endif
