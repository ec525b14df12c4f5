#include "dissoc/potted.hpp"

#include <algorithm>

namespace dissoc {

void PottedGraph::validate() const {
    if (cycle_len < 3) throw DomainError("PottedGraph: cycle order k >= 3 required");
    if (attach.children.empty())
        throw DomainError("PottedGraph: attachment root must have degree >= 1 (a bare cycle is not potted)");
    if (order() > Graph::kMaxOrder)
        throw CapExceeded("PottedGraph: order " + std::to_string(order()) + " exceeds the bitset cap");
}

namespace {

void append_tree(const RootedTree& t, int self, int& next,
                 std::vector<std::pair<int, int>>& edges) {
    for (const auto& c : t.children) {
        int child = next++;
        edges.emplace_back(self, child);
        append_tree(c, child, next, edges);
    }
}

} // namespace

Graph flatten_potted(const PottedGraph& p) {
    p.validate();
    const int k = p.cycle_len;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    int next = k;
    append_tree(p.attach, 0, next, edges); // u = 0
    return Graph(p.order(), edges);
}

std::string canonical_code(const PottedGraph& p) {
    return "P(" + std::to_string(p.cycle_len) + ";" + rooted_code(p.attach) + ")";
}

bool isomorphic(const PottedGraph& a, const PottedGraph& b) {
    return canonical_code(a) == canonical_code(b);
}

std::vector<PottedGraph> enumerate_potted(int n, int k, int cap) {
    if (k < 3) throw DomainError("enumerate_potted: k >= 3 required");
    if (n < k + 1) throw DomainError("enumerate_potted: n >= k+1 required");
    if (n > Graph::kMaxOrder)
        throw CapExceeded("enumerate_potted: order exceeds the bitset cap");
    std::vector<PottedGraph> out;
    for (auto& t : enumerate_rooted_trees(n - k + 1, cap)) {
        PottedGraph p;
        p.cycle_len = k;
        p.attach = std::move(t);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const PottedGraph& a, const PottedGraph& b) {
        return canonical_code(a) < canonical_code(b);
    });
    return out;
}

} // namespace dissoc
