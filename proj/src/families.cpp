#include "dissoc/families.hpp"

#include <algorithm>

namespace dissoc {

namespace {

// Each arm is the child subtree hanging below w; w itself plays the role of
// the identified leaf, so a P_m arm contributes m-1 vertices.
RootedTree p2_arm() { return RootedTree::leaf(); }
RootedTree p3_arm() { return RootedTree::chain(1); }
RootedTree p4_arm() { return RootedTree::chain(2); }

// Attached at a leaf of the claw, so below w: center -> {leaf, leaf}.
RootedTree k13_arm() {
    RootedTree center;
    center.children.push_back(RootedTree::leaf());
    center.children.push_back(RootedTree::leaf());
    return center;
}

// Base arms at w per family; the big T_i arms (P4 / K1,3) are appended after.
std::vector<RootedTree> base_arms(FamilyId id, int variant) {
    switch (id) {
        case FamilyId::T1:
        case FamilyId::G1: return {p3_arm()};
        case FamilyId::T2:
        case FamilyId::G2: return {p2_arm(), p3_arm()};
        case FamilyId::T3:
        case FamilyId::G3: return {p3_arm(), p3_arm()};
        case FamilyId::T4:
        case FamilyId::G4: return {p2_arm(), p2_arm(), p3_arm()};
        case FamilyId::T5:
        case FamilyId::G5: return {p2_arm(), p2_arm(), p2_arm(), p2_arm()};
        case FamilyId::H:
            return variant == 0 ? std::vector<RootedTree>{p3_arm()}
                                : std::vector<RootedTree>{p2_arm(), p2_arm()};
        case FamilyId::G6: return {p3_arm()};
        case FamilyId::G7: return {p2_arm(), p2_arm()};
        case FamilyId::G8: return {};
        case FamilyId::G9: return {p2_arm()};
    }
    return {};
}

bool p4_only(FamilyId id) {
    return id == FamilyId::T1 || id == FamilyId::G1 || id == FamilyId::G8;
}

// Attachment by a new edge: the member families G1..G5 hang the whole tree
// below u through its branch vertex w; G6..G9 identify w with u.
bool edge_attached(FamilyId id) {
    return id == FamilyId::G1 || id == FamilyId::G2 || id == FamilyId::G3 ||
           id == FamilyId::G4 || id == FamilyId::G5;
}

int min_big_arms(FamilyId id) {
    switch (id) {
        case FamilyId::G6:
        case FamilyId::G7:
        case FamilyId::G8:
        case FamilyId::G9: return 1;
        default: return 0;
    }
}

void validate_descriptor(const FamilyDescriptor& d) {
    if (d.p4 < 0 || d.k13 < 0) throw InconsistentDescriptor("negative arm count");
    if (d.k13 > 0 && p4_only(d.id))
        throw InconsistentDescriptor(std::string(family_name(d.id)) + " carries only P4 arms");
    if (d.p4 + d.k13 < min_big_arms(d.id))
        throw InconsistentDescriptor(std::string(family_name(d.id)) + " needs at least one big arm");
    if (d.variant != 0 && !(d.id == FamilyId::H && d.variant == 1))
        throw InconsistentDescriptor("variant is only meaningful for H");
    if (is_potted_family(d.id)) {
        if (d.k < 3) throw InconsistentDescriptor("potted family needs k >= 3");
    } else if (d.k != 0) {
        throw InconsistentDescriptor("tree family carries no k");
    }
    int base = family_base_order(d.id, d.k, d.variant);
    if (d.order != base + 3 * (d.p4 + d.k13))
        throw InconsistentDescriptor("order equation violated for " + std::string(family_name(d.id)));
}

} // namespace

int family_base_order(FamilyId id, int k, int variant) {
    (void)variant; // both H bases have order 3
    switch (id) {
        case FamilyId::T1: return 3;
        case FamilyId::T2: return 4;
        case FamilyId::T3:
        case FamilyId::T4:
        case FamilyId::T5: return 5;
        case FamilyId::H: return 3;
        case FamilyId::G1: return k + 3;
        case FamilyId::G2: return k + 4;
        case FamilyId::G3:
        case FamilyId::G4:
        case FamilyId::G5: return k + 5;
        case FamilyId::G6:
        case FamilyId::G7: return k + 2;
        case FamilyId::G8: return k;
        case FamilyId::G9: return k + 1;
    }
    return 0;
}

RootedTree family_arms_at_w(const FamilyDescriptor& d) {
    validate_descriptor(d);
    RootedTree w;
    for (auto& arm : base_arms(d.id, d.variant)) w.children.push_back(std::move(arm));
    for (int i = 0; i < d.p4; ++i) w.children.push_back(p4_arm());
    for (int i = 0; i < d.k13; ++i) w.children.push_back(k13_arm());
    return w;
}

std::variant<Graph, PottedGraph> build_family_member(const FamilyDescriptor& d) {
    RootedTree at_w = family_arms_at_w(d);
    if (!is_potted_family(d.id)) return flatten_rooted(at_w);

    PottedGraph p;
    p.cycle_len = d.k;
    if (edge_attached(d.id)) {
        RootedTree root;
        root.children.push_back(std::move(at_w)); // u -- w edge
        p.attach = std::move(root);
    } else {
        p.attach = std::move(at_w); // w identified with u
    }
    p.validate();
    return p;
}

std::vector<FamilyMember> enumerate_family(FamilyId id, int n, int k) {
    std::vector<FamilyMember> out;
    const bool potted = is_potted_family(id);
    if (potted && k < 3) throw DomainError("enumerate_family: potted family needs k >= 3");

    const int variants = (id == FamilyId::H) ? 2 : 1;
    for (int variant = 0; variant < variants; ++variant) {
        int base = family_base_order(id, potted ? k : 0, variant);
        int rest = n - base;
        if (rest < 0 || rest % 3 != 0) continue;
        int l = rest / 3;
        if (l < min_big_arms(id)) continue;
        for (int p4 = l; p4 >= 0; --p4) {
            int k13 = l - p4;
            if (k13 > 0 && p4_only(id)) continue;
            FamilyDescriptor d{id, potted ? k : 0, p4, k13, n, variant};
            auto member = build_family_member(d);
            FamilyMember fm;
            fm.descriptor = d;
            fm.code = potted ? canonical_code(std::get<PottedGraph>(member))
                             : free_tree_code(std::get<Graph>(member));
            out.push_back(std::move(fm));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FamilyMember& a, const FamilyMember& b) { return a.code < b.code; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FamilyMember& a, const FamilyMember& b) { return a.code == b.code; }),
              out.end());
    return out;
}

std::vector<FamilyDescriptor> family_membership(const PottedGraph& g) {
    std::vector<FamilyDescriptor> out;
    const std::string code = canonical_code(g);
    static const FamilyId potted_ids[] = {FamilyId::G1, FamilyId::G2, FamilyId::G3,
                                          FamilyId::G4, FamilyId::G5, FamilyId::G6,
                                          FamilyId::G7, FamilyId::G8, FamilyId::G9};
    for (FamilyId id : potted_ids)
        for (const auto& m : enumerate_family(id, g.order(), g.cycle_len))
            if (m.code == code) out.push_back(m.descriptor);
    return out;
}

std::vector<FamilyDescriptor> family_membership_tree(const Graph& tree) {
    std::vector<FamilyDescriptor> out;
    const std::string code = free_tree_code(tree);
    static const FamilyId tree_ids[] = {FamilyId::T1, FamilyId::T2, FamilyId::T3,
                                        FamilyId::T4, FamilyId::T5, FamilyId::H};
    for (FamilyId id : tree_ids)
        for (const auto& m : enumerate_family(id, tree.order()))
            if (m.code == code) out.push_back(m.descriptor);
    return out;
}

} // namespace dissoc
