#ifndef DISSOC_POTTED_HPP
#define DISSOC_POTTED_HPP

#include "dissoc/rooted_tree.hpp"

#include <string>
#include <vector>

namespace dissoc {

// A unicyclic graph whose cycle has exactly one vertex of degree > 2.  The
// cycle has order k and the tree hanging at that vertex u is stored rooted
// at u; the root must have degree >= 1, which is what makes d(u) > 2 in the
// flattened graph.  An attachment by a new edge (u -- w) is the special case
// where the root has exactly one child.
struct PottedGraph {
    int cycle_len = 3;  // k
    RootedTree attach;  // rooted at u; order n - k + 1

    int order() const { return cycle_len + attach.order() - 1; }
    int branch_count() const { return static_cast<int>(attach.children.size()); } // r

    void validate() const;
};

// Fixed vertex layout: cycle vertices 0..k-1 in cyclic order with u = 0,
// then tree vertices in preorder.
Graph flatten_potted(const PottedGraph& p);

// "P(k;<rooted-tree-code>)"; equal codes iff isomorphic, since the cycle is
// vertex-transitive and u is the unique cycle vertex of degree > 2.
std::string canonical_code(const PottedGraph& p);

bool isomorphic(const PottedGraph& a, const PottedGraph& b);

// All non-isomorphic members of P(n,k), in canonical-code order.
// |P(n,k)| equals the number of rooted trees of order n-k+1.
std::vector<PottedGraph> enumerate_potted(int n, int k, int cap = 18);

} // namespace dissoc

#endif
