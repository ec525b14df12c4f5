#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissoc/potted.hpp"
#include "support/subset_oracle.hpp"

using namespace dissoc;

TEST_CASE("rooted tree enumeration counts") {
    const long long expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
    for (int m = 1; m <= 10; ++m) {
        CHECK(static_cast<long long>(enumerate_rooted_trees(m).size()) == expected[m - 1]);
        CHECK(rooted_tree_count(m) == expected[m - 1]); // independent recurrence
    }
    CHECK_THROWS_AS(enumerate_rooted_trees(20, 16), CapExceeded);
}

TEST_CASE("rooted codes are canonical and strictly increasing") {
    for (int m = 2; m <= 9; ++m) {
        auto trees = enumerate_rooted_trees(m);
        std::string prev;
        for (const auto& t : trees) {
            CHECK(t.order() == m);
            std::string code = rooted_code(t);
            CHECK(code > prev); // sorted with no duplicates
            prev = code;
        }
    }
}

TEST_CASE("rooted code ignores child insertion order") {
    RootedTree a;
    a.children.push_back(RootedTree::chain(2));
    a.children.push_back(RootedTree::leaf());
    RootedTree b;
    b.children.push_back(RootedTree::leaf());
    b.children.push_back(RootedTree::chain(2));
    CHECK(rooted_code(a) == rooted_code(b));
}

TEST_CASE("potted enumeration sizes follow the rooted-tree sequence") {
    const long long expected[] = {1, 2, 4, 9, 20, 48, 115, 286, 719};
    for (int k : {3, 5, 6, 7})
        for (int extra = 1; extra <= 6; ++extra)
            CHECK(static_cast<long long>(enumerate_potted(k + extra, k).size()) ==
                  expected[extra - 1]);
    CHECK_THROWS_AS(enumerate_potted(6, 6), DomainError); // a bare cycle is not potted
    CHECK_THROWS_AS(enumerate_potted(6, 2), DomainError);
}

TEST_CASE("canonical codes separate attachment shapes") {
    // P3 attached at an endpoint vs. at the center.
    PottedGraph end, mid;
    end.cycle_len = 6;
    end.attach.children.push_back(RootedTree::chain(2));
    mid.cycle_len = 6;
    RootedTree center;
    center.children.push_back(RootedTree::leaf());
    center.children.push_back(RootedTree::leaf());
    mid.attach.children.push_back(center);
    CHECK(canonical_code(end) != canonical_code(mid));
    CHECK_FALSE(isomorphic(end, mid));
    CHECK(canonical_code(end) == "P(6;(((()))))");

    // Claw attached at a leaf vs. at its center.
    PottedGraph at_leaf, at_center;
    at_leaf.cycle_len = 6;
    RootedTree claw_from_leaf; // u - center - {leaf, leaf}
    claw_from_leaf.children.push_back(center);
    at_leaf.attach = claw_from_leaf;
    at_center.cycle_len = 6;
    at_center.attach.children.push_back(RootedTree::leaf());
    at_center.attach.children.push_back(RootedTree::leaf());
    at_center.attach.children.push_back(RootedTree::leaf());
    CHECK(canonical_code(at_leaf) != canonical_code(at_center));

    // Arm order does not matter.
    PottedGraph ab, ba;
    ab.cycle_len = 5;
    ab.attach.children.push_back(RootedTree::chain(1));
    ab.attach.children.push_back(RootedTree::chain(2));
    ba.cycle_len = 5;
    ba.attach.children.push_back(RootedTree::chain(2));
    ba.attach.children.push_back(RootedTree::chain(1));
    CHECK(isomorphic(ab, ba));
}

TEST_CASE("potted enumeration is duplicate-free in code order") {
    auto graphs = enumerate_potted(12, 5);
    std::string prev;
    for (const auto& p : graphs) {
        std::string code = canonical_code(p);
        CHECK(code > prev);
        prev = code;
        CHECK(p.order() == 12);
        CHECK(p.cycle_len == 5);
    }
}

TEST_CASE("free tree codes distinguish and identify") {
    // Spider with legs 1,1,3 vs. path P6.
    Graph p6 = make_path(6);
    Graph spider(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(free_tree_code(p6) != free_tree_code(spider));

    // P6 relabeled arbitrarily stays P6.
    Graph p6_shuffled(6, {{2, 5}, {5, 0}, {0, 4}, {4, 1}, {1, 3}});
    CHECK(free_tree_code(p6) == free_tree_code(p6_shuffled));

    CHECK(free_tree_code(make_path(1)) == "()");
    CHECK_THROWS_AS(free_tree_code(make_cycle(4)), DomainError);

    // to_rooted round-trips through flatten_rooted.
    for (const auto& t : enumerate_rooted_trees(7)) {
        Graph g = flatten_rooted(t);
        CHECK(rooted_code(to_rooted(g, 0)) == rooted_code(t));
    }
}
