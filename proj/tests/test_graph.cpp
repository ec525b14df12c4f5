#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissoc/graph.hpp"
#include "dissoc/potted.hpp"
#include "support/subset_oracle.hpp"

#include <random>

using namespace dissoc;

TEST_CASE("graph construction and invariants") {
    Graph c4 = make_cycle(4);
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(c4.degree(v) == 2);
        for (int u : c4.neighbors(v).to_vector()) CHECK(c4.neighbors(u).contains(v));
    }
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(64, {}), DomainError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), DomainError);
    CHECK(Graph().order() == 0); // empty sentinel
}

TEST_CASE("induced subgraph") {
    Graph c4 = make_cycle(4);
    auto adjacent = induced_subgraph(c4, VertexSet::of({0, 1}));
    CHECK(adjacent.graph.order() == 2);
    CHECK(adjacent.graph.edge_count() == 1); // P2
    auto opposite = induced_subgraph(c4, VertexSet::of({0, 2}));
    CHECK(opposite.graph.order() == 2);
    CHECK(opposite.graph.edge_count() == 0); // 2K1

    Graph p6 = make_path(6);
    auto end = induced_subgraph(p6, VertexSet::of({0, 1, 2}));
    CHECK(end.graph.order() == 3);
    CHECK(end.graph.edge_count() == 2);
    CHECK(end.graph.has_edge(0, 1));
    CHECK(end.graph.has_edge(1, 2)); // P3
    CHECK(end.to_original == std::vector<int>{0, 1, 2});

    auto identity = induced_subgraph(p6, p6.vertices());
    CHECK(identity.graph.edges() == p6.edges());

    CHECK(induced_subgraph(p6, VertexSet()).graph.order() == 0);
}

TEST_CASE("dissociation predicate") {
    Graph p3 = make_path(3);
    CHECK(is_dissociation_set(p3, VertexSet::of({0, 2})));
    CHECK_FALSE(is_dissociation_set(p3, VertexSet::of({0, 1, 2})));

    Graph c4 = make_cycle(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(is_dissociation_set(c4, VertexSet::of({a, b})));
}

TEST_CASE("neighborhoods") {
    Graph p3 = make_path(3);
    auto [open, closed] = neighborhoods(p3, 1);
    CHECK(open == VertexSet::of({0, 2}));
    CHECK(closed == VertexSet::of({0, 1, 2}));

    Graph c5 = make_cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(neighborhoods(c5, v).first.count() == 2);

    PottedGraph g2;
    g2.cycle_len = 6;
    RootedTree w; // w -> {leaf, path-of-2}
    w.children.push_back(RootedTree::leaf());
    w.children.push_back(RootedTree::chain(1));
    g2.attach.children.push_back(std::move(w));
    Graph g = flatten_potted(g2);
    CHECK(g.order() == 10);
    CHECK(neighborhoods(g, 0).first.count() == 3); // two cycle neighbors + w
}

TEST_CASE("components") {
    Graph two_p3(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    auto comps = components(two_p3);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == VertexSet::of({0, 1, 2}));
    CHECK(comps[0].second.order() == 3);
    CHECK(comps[1].second.order() == 3);

    CHECK(components(make_cycle(5)).size() == 1);
}

TEST_CASE("flatten_potted layout and validation") {
    PottedGraph tri_pendant;
    tri_pendant.cycle_len = 3;
    tri_pendant.attach.children.push_back(RootedTree::leaf());
    Graph g = flatten_potted(tri_pendant);
    CHECK(g.order() == 4);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(3) == 1);

    PottedGraph two_pendants;
    two_pendants.cycle_len = 4;
    two_pendants.attach.children.push_back(RootedTree::leaf());
    two_pendants.attach.children.push_back(RootedTree::leaf());
    CHECK(flatten_potted(two_pendants).order() == 6);
    CHECK(flatten_potted(two_pendants).degree(0) == 4);

    PottedGraph bad_k;
    bad_k.cycle_len = 2;
    bad_k.attach.children.push_back(RootedTree::leaf());
    CHECK_THROWS_AS(flatten_potted(bad_k), DomainError);

    PottedGraph bare;
    bare.cycle_len = 5; // root degree 0
    CHECK_THROWS_AS(flatten_potted(bare), DomainError);
}

namespace {

// Unique cycle recovery: every vertex on the single cycle of a unicyclic
// graph keeps degree 2 after repeatedly deleting leaves.
std::pair<int, int> cycle_and_branch(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    VertexSet alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : alive.to_vector()) {
            if (deg[static_cast<std::size_t>(v)] == 1) {
                alive.remove(v);
                for (int u : (g.neighbors(v) & alive).to_vector()) --deg[static_cast<std::size_t>(u)];
                changed = true;
            }
        }
    }
    int big = 0;
    for (int v : alive.to_vector())
        if (g.degree(v) > 2) ++big;
    return {alive.count(), big};
}

} // namespace

TEST_CASE("flattened potted graphs are unicyclic with one branch vertex") {
    for (int k : {3, 5, 6})
        for (auto& p : enumerate_potted(k + 4, k)) {
            Graph g = flatten_potted(p);
            auto [cycle_len, big] = cycle_and_branch(g);
            CHECK(cycle_len == k);
            CHECK(big == 1);
            CHECK(g.edge_count() == g.order()); // exactly one cycle
        }
}

TEST_CASE("3-path vertex cover duality") {
    // S is a dissociation set iff its complement meets every path on 3 vertices.
    auto check_duality = [](const Graph& g) {
        std::vector<std::array<int, 3>> paths;
        for (int b = 0; b < g.order(); ++b) {
            auto nb = g.neighbors(b).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    paths.push_back({nb[i], b, nb[j]});
        }
        for (std::uint64_t mask = 0; mask < (1ULL << g.order()); ++mask) {
            VertexSet s(mask);
            bool covers = true;
            for (auto& p : paths)
                if (s.contains(p[0]) && s.contains(p[1]) && s.contains(p[2])) {
                    covers = false; // complement misses this P3
                    break;
                }
            CHECK(is_dissociation_set(g, s) == covers);
        }
    };
    for (const auto& g : testing::all_graphs(4)) check_duality(g);
    for (const auto& g : testing::all_graphs(5)) check_duality(g);

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 8 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        check_duality(Graph(n, edges));
    }
}
