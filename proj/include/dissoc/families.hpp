#ifndef DISSOC_FAMILIES_HPP
#define DISSOC_FAMILIES_HPP

#include "dissoc/family_id.hpp"
#include "dissoc/potted.hpp"

#include <variant>
#include <vector>

namespace dissoc {

// A member of one of the families, identified by its arm multiset: p4 arms
// are pendant P4 paths attached at an end vertex, k13 arms are claws attached
// at a leaf.  Every family fixes a base of small arms at the branch vertex w,
// so order = base + 3*(p4 + k13).  The H family has two bases of equal order
// (a P3 arm vs. two P2 arms); `variant` = 1 selects the second one.
struct FamilyDescriptor {
    FamilyId id = FamilyId::T1;
    int k = 0;      // cycle order; potted families only
    int p4 = 0;
    int k13 = 0;
    int order = 0;  // n
    int variant = 0;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

// Base order of a family (k included for potted ids; H needs the variant).
int family_base_order(FamilyId id, int k, int variant = 0);

// For T/H ids: the tree with the branch vertex w at index 0.
// For G ids: the potted graph.  Throws InconsistentDescriptor when the order
// equation fails, the id forbids k13 arms (T1, G1, G8), or an arm-count
// convention is violated (G6, G7, G9 need at least one big arm; G8 at least
// one P4).
std::variant<Graph, PottedGraph> build_family_member(const FamilyDescriptor& d);

// The rooted arm structure below the branch vertex w, shared by the builders
// and the structure-theorem verifier.
RootedTree family_arms_at_w(const FamilyDescriptor& d);

struct FamilyMember {
    FamilyDescriptor descriptor;
    std::string code; // canonical potted code, or free-tree code for T/H ids
};

// All non-isomorphic members of the family with the given order (and cycle
// order, for potted ids); empty when the order equation has no solution.
std::vector<FamilyMember> enumerate_family(FamilyId id, int n, int k = 0);

// Every descriptor whose built member is isomorphic to the given graph;
// overlaps between families are reported, not collapsed.
std::vector<FamilyDescriptor> family_membership(const PottedGraph& g);
std::vector<FamilyDescriptor> family_membership_tree(const Graph& tree);

} // namespace dissoc

#endif
