#ifndef DISSOC_ROOTED_TREE_HPP
#define DISSOC_ROOTED_TREE_HPP

#include "dissoc/graph.hpp"

#include <string>
#include <vector>

namespace dissoc {

struct RootedTree {
    std::vector<RootedTree> children;

    int order() const {
        int s = 1;
        for (const auto& c : children) s += c.order();
        return s;
    }

    static RootedTree leaf() { return {}; }
    // Path hanging below the root: root -> v1 -> ... -> v_len.
    static RootedTree chain(int len) {
        RootedTree t;
        if (len > 0) t.children.push_back(chain(len - 1));
        return t;
    }
};

// AHU parenthesis code: "(" + sorted child codes + ")".  Equal codes iff
// the rooted trees are isomorphic.
std::string rooted_code(const RootedTree& t);

// All non-isomorphic rooted trees of order m, sorted by code.
// Counts for m = 1, 2, ...: 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, ...
std::vector<RootedTree> enumerate_rooted_trees(int m, int cap = 16);

// The same counts from the classical recurrence
//   (n-1) r(n) = sum_{j=1}^{n-1} ( sum_{d | j} d r(d) ) r(n-j),
// kept as an independent cross-check of the generator.
long long rooted_tree_count(int m);

// Preorder flattening with the root at index 0.
Graph flatten_rooted(const RootedTree& t);

// Rebuild a rooted tree from a tree-shaped graph (throws DomainError if g is
// not a tree) rooted at the given vertex.
RootedTree to_rooted(const Graph& g, int root);

// Canonical code of a free tree: the rooted code at its center, or the
// smaller of the two codes for bicentral trees.
std::string free_tree_code(const Graph& g);

} // namespace dissoc

#endif
