#include "dissoc/structural.hpp"

#include "dissoc/checked_arith.hpp"

#include <algorithm>

namespace dissoc {

TreeTerms TreeTermsCache::get(const RootedTree& rooted_at_v, int cap) {
    const std::string key = rooted_code(rooted_at_v);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    Graph t = flatten_rooted(rooted_at_v); // v = 0
    DissResult whole = solve(t, SolveMode::Count, cap);
    TreeTerms terms;
    terms.m = whole.count;
    terms.diss = whole.diss;
    terms.mbar_v = restricted_count(t, VertexSet::of({0}), cap);
    terms.mbar_nv = restricted_count(t, t.neighbors(0), cap);
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(key, terms); // idempotent: recomputation yields the same value
    return terms;
}

DecompositionTerms decompose(const PottedGraph& p, TreeTermsCache& cache, int cap) {
    p.validate();
    DecompositionTerms d;
    d.split = closed_form::anchor_split(p.cycle_len);
    for (const auto& child : p.attach.children) d.trees.push_back(cache.get(child, cap));
    return d;
}

PottedCount count_potted(const PottedGraph& p, TreeTermsCache& cache, int cap) {
    DecompositionTerms d = decompose(p, cache, cap);

    long long prod_m = 1, prod_mbar = 1, diss_trees = 0;
    for (const auto& t : d.trees) {
        prod_m = checked_mul(prod_m, t.m);
        prod_mbar = checked_mul(prod_mbar, t.mbar_v);
        diss_trees = checked_add(diss_trees, t.diss);
    }
    long long swap_sum = 0; // sum over j of mbar(T_j - N(v_j)) * prod_{i != j} mbar(T_i - v_i)
    for (std::size_t j = 0; j < d.trees.size(); ++j) {
        long long cof = 1;
        for (std::size_t i = 0; i < d.trees.size(); ++i)
            if (i != j) cof = checked_mul(cof, d.trees[i].mbar_v);
        swap_sum = checked_add(swap_sum, checked_mul(d.trees[j].mbar_nv, cof));
    }

    PottedCount out;
    out.at_u.minus = checked_mul(d.split.minus, prod_m);
    out.at_u.zero = checked_mul(d.split.zero, prod_mbar);
    out.at_u.one = checked_add(checked_mul(d.split.one, prod_mbar),
                               checked_mul(d.split.zero, swap_sum));
    out.m = out.at_u.total();
    out.diss = checked_add(closed_form::diss_cycle(p.cycle_len), diss_trees);
    return out;
}

PottedCount count_potted(const PottedGraph& p) {
    TreeTermsCache cache;
    return count_potted(p, cache);
}

bool check_cut_vertex_additivity(const Graph& g, VertexSet v1, int u, int cap) {
    if (!v1.subset_of(g.vertices()) || !v1.contains(u))
        throw PreconditionViolated("cut_vertex_additivity: u must lie in V1 within the graph");
    VertexSet rest = g.vertices() - v1;
    for (int v : (v1 - VertexSet::of({u})).to_vector())
        if (!(g.neighbors(v) & rest).empty())
            throw PreconditionViolated("cut_vertex_additivity: edge between V1 \\ {u} and the rest");
    Graph g1 = induced_subgraph(g, v1).graph;
    Graph g2 = induced_subgraph(g, rest).graph;
    int u_local = (v1 & VertexSet::full(u)).count(); // index of u inside V1
    Graph g1_minus_u = induced_subgraph(g1, g1.vertices() - VertexSet::of({u_local})).graph;
    if (solve(g1_minus_u, SolveMode::Count, cap).diss != solve(g1, SolveMode::Count, cap).diss)
        throw PreconditionViolated("cut_vertex_additivity: diss(G1 - u) != diss(G1)");
    return solve(g, SolveMode::Count, cap).diss ==
           solve(g1, SolveMode::Count, cap).diss + solve(g2, SolveMode::Count, cap).diss;
}

bool check_oplus_subset(const Graph& g, VertexSet v1, int cap) {
    if (!v1.subset_of(g.vertices()))
        throw PreconditionViolated("oplus_subset: V1 not within the graph");
    VertexSet rest = g.vertices() - v1;
    auto part1 = induced_subgraph(g, v1);
    auto part2 = induced_subgraph(g, rest);
    DissResult r1 = solve(part1.graph, SolveMode::Enumerate, cap);
    DissResult r2 = solve(part2.graph, SolveMode::Enumerate, cap);
    DissResult whole = solve(g, SolveMode::Enumerate, cap);
    if (whole.diss != r1.diss + r2.diss)
        throw PreconditionViolated("oplus_subset: diss additivity hypothesis fails");

    auto lift = [](const std::vector<VertexSet>& sets, const std::vector<int>& to_original) {
        std::vector<VertexSet> out;
        out.reserve(sets.size());
        for (VertexSet s : sets) {
            VertexSet t;
            for (int v : s.to_vector()) t.add(to_original[static_cast<std::size_t>(v)]);
            out.push_back(t);
        }
        return out;
    };
    std::vector<VertexSet> joined =
        oplus_join(lift(r1.sets, part1.to_original), lift(r2.sets, part2.to_original));
    std::vector<std::uint64_t> bits;
    bits.reserve(joined.size());
    for (VertexSet s : joined) bits.push_back(s.bits);
    std::sort(bits.begin(), bits.end());
    for (VertexSet s : whole.sets)
        if (!std::binary_search(bits.begin(), bits.end(), s.bits)) return false;
    return true;
}

} // namespace dissoc
