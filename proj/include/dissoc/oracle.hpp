#ifndef DISSOC_ORACLE_HPP
#define DISSOC_ORACLE_HPP

#include "dissoc/graph.hpp"

#include <vector>

namespace dissoc {

struct DissResult {
    int diss = 0;                // dissociation number
    long long count = 0;         // m(G), number of maximum dissociation sets
    std::vector<VertexSet> sets; // filled in enumerate mode, canonical order
};

// Counts of maximum dissociation sets split by the state of a distinguished
// vertex v: excluded / included isolated / included with one partner.
struct ClassifiedCounts {
    long long minus = 0; // m(G, v^-)
    long long zero = 0;  // m(G, v^0)
    long long one = 0;   // m(G, v^1)

    long long total() const { return minus + zero + one; }
    friend bool operator==(const ClassifiedCounts&, const ClassifiedCounts&) = default;
};

enum class SolveMode { Count, Enumerate };

inline constexpr int kDefaultOracleCap = 30;

// Exact diss(G) and m(G) by three-way branch and bound (exclude vertex /
// include isolated / include with a chosen partner).  Enumerate mode also
// returns every maximum dissociation set, sorted as bit-reversed integers.
DissResult solve(const Graph& g, SolveMode mode = SolveMode::Count, int cap = kDefaultOracleCap);

ClassifiedCounts classify(const Graph& g, int v, int cap = kDefaultOracleCap);

// mbar(T - removed): m(T - removed) if removing the set preserves diss(T),
// else 0; the empty remainder also counts as 0.
long long restricted_count(const Graph& t, VertexSet removed, int cap = kDefaultOracleCap);

// { a ∪ b : a in A, b in B } for families over disjoint vertex ranges.
std::vector<VertexSet> oplus_join(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

} // namespace dissoc

#endif
