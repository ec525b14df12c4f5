#ifndef DISSOC_GRAPH_HPP
#define DISSOC_GRAPH_HPP

#include "dissoc/errors.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dissoc {

// Membership bitset over vertex indices 0..62 of an associated Graph.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }

    bool contains(int v) const { return (bits >> v) & 1ULL; }
    VertexSet& add(int v) { bits |= 1ULL << v; return *this; }
    VertexSet& remove(int v) { bits &= ~(1ULL << v); return *this; }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    // Lowest member; undefined on the empty set.
    int lowest() const { return __builtin_ctzll(bits); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
        return out;
    }
};

// Immutable simple undirected graph over vertex indices 0..n-1, adjacency
// stored as one bitset word per vertex.  Order 0 is the empty sentinel that
// vertex-removal helpers may produce; everything else requires order >= 1.
class Graph {
public:
    static constexpr int kMaxOrder = 63;

    Graph() = default; // order-0 sentinel

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0)) {
        if (n < 0 || n > kMaxOrder)
            throw DomainError("Graph: order must be in [0, 63], got " + std::to_string(n));
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw DomainError("Graph: edge endpoint out of range");
            if (a == b) throw DomainError("Graph: self-loop rejected");
            adj_[static_cast<std::size_t>(a)].add(b);
            adj_[static_cast<std::size_t>(b)].add(a);
        }
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    bool has_edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)].contains(b); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            for (int u : (neighbors(v) - VertexSet::full(v + 1)).to_vector())
                out.emplace_back(v, u);
        return out;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// True iff every vertex of s has at most one neighbor inside s.
bool is_dissociation_set(const Graph& g, VertexSet s);

// Open and closed neighborhood of v.
std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original; // new index -> original index, increasing
};

// Subgraph induced by s, vertices relabeled 0..|s|-1 in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Connected components ordered by least vertex index.
std::vector<std::pair<VertexSet, Graph>> components(const Graph& g);

// Convenience builders used throughout tests and family construction.
Graph make_path(int n);
Graph make_cycle(int n);

} // namespace dissoc

#endif
