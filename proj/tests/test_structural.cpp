#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissoc/families.hpp"
#include "dissoc/structural.hpp"
#include "support/subset_oracle.hpp"

using namespace dissoc;

namespace {

PottedGraph potted_member(const FamilyDescriptor& d) {
    return std::get<PottedGraph>(build_family_member(d));
}

// Flatten with the cycle labels rotated by `shift`; the attachment stays at
// the same cycle vertex, only the labeling changes.
Graph flatten_rotated(const PottedGraph& p, int shift) {
    Graph plain = flatten_potted(p);
    int k = p.cycle_len;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : plain.edges()) {
        int ra = a < k ? (a + shift) % k : a;
        int rb = b < k ? (b + shift) % k : b;
        edges.emplace_back(ra, rb);
    }
    return Graph(plain.order(), edges);
}

} // namespace

TEST_CASE("decomposition terms for the G2 member (k=6, n=10)") {
    PottedGraph g2 = potted_member({FamilyId::G2, 6, 0, 0, 10, 0});
    TreeTermsCache cache;
    DecompositionTerms d = decompose(g2, cache);
    CHECK(d.split == closed_form::AnchorSplit{1, 0, 2});
    REQUIRE(d.trees.size() == 1); // a single P4 component attached at its inner vertex
    CHECK(d.trees[0].m == 2);
    CHECK(d.trees[0].mbar_v == 1);
    CHECK(d.trees[0].mbar_nv == 0);

    PottedCount c = count_potted(g2);
    CHECK(c.m == 4); // 1*2 + 0 + (2*1 + 0)
    CHECK(c.at_u == ClassifiedCounts{2, 0, 2});
}

TEST_CASE("count for the G1 member (k=6, n=12)") {
    PottedGraph g1 = potted_member({FamilyId::G1, 6, 1, 0, 12, 0});
    TreeTermsCache cache;
    DecompositionTerms d = decompose(g1, cache);
    REQUIRE(d.trees.size() == 1); // P6 attached at its third vertex
    CHECK(d.trees[0].m == 6);
    CHECK(d.trees[0].mbar_v == 3);
    CHECK(d.trees[0].mbar_nv == 1);
    CHECK(count_potted(g1).m == 12); // 1*6 + 0 + 2*3 + 0
}

TEST_CASE("structural counter equals the oracle on small potted graphs") {
    TreeTermsCache cache;
    for (int k : {3, 4, 5, 6}) {
        for (int n = k + 1; n <= k + 5 && n <= 12; ++n) {
            for (const auto& p : enumerate_potted(n, k)) {
                Graph flat = flatten_potted(p);
                DissResult oracle = solve(flat);
                ClassifiedCounts at_u = classify(flat, 0);
                PottedCount fast = count_potted(p, cache);
                CHECK(fast.m == oracle.count);
                CHECK(fast.diss == oracle.diss);
                CHECK(fast.at_u == at_u);
            }
        }
    }
}

TEST_CASE("degenerate arms collapse the u0/u1 terms") {
    // A pendant vertex component has mbar(T-v) = 0 and mbar(T-N(v)) = 1;
    // adding a second one kills both non-minus terms.
    PottedGraph p;
    p.cycle_len = 5;
    p.attach.children.push_back(RootedTree::leaf());
    p.attach.children.push_back(RootedTree::leaf());
    PottedCount c = count_potted(p);
    CHECK(c.at_u.zero == 0);
    CHECK(c.at_u.one == 0);
    CHECK(c.m == c.at_u.minus);
    CHECK(c.m == solve(flatten_potted(p)).count);
}

TEST_CASE("cycle relabeling leaves counts unchanged") {
    PottedGraph p = potted_member({FamilyId::G6, 7, 1, 1, 15, 0});
    long long expected = count_potted(p).m;
    for (int shift : {1, 2, 3}) {
        Graph rotated = flatten_rotated(p, shift);
        CHECK(solve(rotated).count == expected);
    }
}

TEST_CASE("cut vertex additivity") {
    // Potted graph, V1 = cycle, u = attachment vertex.
    PottedGraph p = potted_member({FamilyId::G2, 5, 0, 0, 9, 0});
    Graph g = flatten_potted(p);
    VertexSet cycle = VertexSet::full(5);
    CHECK(check_cut_vertex_additivity(g, cycle, 0));

    // Two triangles joined through a bridge; split off the first triangle at
    // its cut vertex.
    Graph bridge(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
    CHECK(check_cut_vertex_additivity(bridge, VertexSet::of({0, 1, 2}), 2));

    // Edge crossing the split violates the hypothesis.
    Graph c6 = make_cycle(6);
    CHECK_THROWS_AS(check_cut_vertex_additivity(c6, VertexSet::of({0, 1, 2}), 1),
                    PreconditionViolated);
}

TEST_CASE("oplus subset inclusion") {
    // Disjoint union: equality m(G) = m(G[V1]) * m(G - V1).
    Graph two_p3(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(check_oplus_subset(two_p3, VertexSet::of({0, 1, 2})));
    CHECK(solve(two_p3).count ==
          solve(make_path(3)).count * solve(make_path(3)).count);

    // Potted graph, V1 = one tree component.
    PottedGraph p = potted_member({FamilyId::G2, 5, 0, 0, 9, 0});
    Graph g = flatten_potted(p);
    VertexSet t1 = g.vertices() - VertexSet::full(5);
    CHECK(check_oplus_subset(g, t1));

    // A split where diss additivity fails.
    Graph p3 = make_path(3);
    CHECK_THROWS_AS(check_oplus_subset(p3, VertexSet::of({1})), PreconditionViolated);
}

TEST_CASE("memoized terms are reused across graphs") {
    TreeTermsCache cache;
    PottedGraph a = potted_member({FamilyId::G6, 5, 2, 0, 13, 0});
    PottedGraph b = potted_member({FamilyId::G6, 8, 2, 0, 16, 0});
    long long ma = count_potted(a, cache).m;
    long long mb = count_potted(b, cache).m;
    CHECK(ma == solve(flatten_potted(a)).count);
    CHECK(mb == solve(flatten_potted(b)).count);
}
