#include "dissoc/rooted_tree.hpp"

#include <algorithm>
#include <mutex>

namespace dissoc {

std::string rooted_code(const RootedTree& t) {
    std::vector<std::string> codes;
    codes.reserve(t.children.size());
    for (const auto& c : t.children) codes.push_back(rooted_code(c));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    out += ")";
    return out;
}

namespace {

std::mutex g_tree_cache_mutex;
std::vector<std::vector<RootedTree>> g_tree_cache; // g_tree_cache[m] = trees of order m

// Children are generated as a non-increasing sequence of (order, index) pairs,
// so each child multiset appears exactly once.
void gen_children(int remaining, int max_order, int max_index,
                  std::vector<RootedTree>& acc, std::vector<RootedTree>& out) {
    if (remaining == 0) {
        RootedTree t;
        t.children = acc;
        out.push_back(std::move(t));
        return;
    }
    for (int o = std::min(remaining, max_order); o >= 1; --o) {
        const auto& pool = g_tree_cache[static_cast<std::size_t>(o)];
        int hi = (o == max_order) ? max_index : static_cast<int>(pool.size()) - 1;
        for (int i = hi; i >= 0; --i) {
            acc.push_back(pool[static_cast<std::size_t>(i)]);
            gen_children(remaining - o, o, i, acc, out);
            acc.pop_back();
        }
    }
}

void fill_cache_upto(int m) {
    if (g_tree_cache.empty()) {
        g_tree_cache.resize(2);
        g_tree_cache[1].push_back(RootedTree::leaf());
    }
    for (int o = static_cast<int>(g_tree_cache.size()); o <= m; ++o) {
        std::vector<RootedTree> out;
        std::vector<RootedTree> acc;
        gen_children(o - 1, o - 1, static_cast<int>(g_tree_cache[static_cast<std::size_t>(o - 1)].size()) - 1,
                     acc, out);
        std::sort(out.begin(), out.end(), [](const RootedTree& a, const RootedTree& b) {
            return rooted_code(a) < rooted_code(b);
        });
        g_tree_cache.push_back(std::move(out));
    }
}

} // namespace

std::vector<RootedTree> enumerate_rooted_trees(int m, int cap) {
    if (m < 1) throw DomainError("enumerate_rooted_trees: m >= 1 required");
    if (m > cap) throw CapExceeded("enumerate_rooted_trees: m = " + std::to_string(m) +
                                   " exceeds cap " + std::to_string(cap));
    std::lock_guard<std::mutex> lock(g_tree_cache_mutex);
    fill_cache_upto(m);
    return g_tree_cache[static_cast<std::size_t>(m)];
}

long long rooted_tree_count(int m) {
    if (m < 1) throw DomainError("rooted_tree_count: m >= 1 required");
    std::vector<long long> r(static_cast<std::size_t>(m) + 1, 0);
    r[1] = 1;
    for (int n = 2; n <= m; ++n) {
        long long acc = 0;
        for (int j = 1; j <= n - 1; ++j) {
            long long s = 0;
            for (int d = 1; d <= j; ++d)
                if (j % d == 0) s += d * r[static_cast<std::size_t>(d)];
            acc += s * r[static_cast<std::size_t>(n - j)];
        }
        r[static_cast<std::size_t>(n)] = acc / (n - 1);
    }
    return r[static_cast<std::size_t>(m)];
}

namespace {

void flatten_into(const RootedTree& t, int self, int& next,
                  std::vector<std::pair<int, int>>& edges) {
    for (const auto& c : t.children) {
        int child = next++;
        edges.emplace_back(self, child);
        flatten_into(c, child, next, edges);
    }
}

} // namespace

Graph flatten_rooted(const RootedTree& t) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    flatten_into(t, 0, next, edges);
    return Graph(t.order(), edges);
}

namespace {

void build_rooted(const Graph& g, int v, int parent, RootedTree& out) {
    for (int u : g.neighbors(v).to_vector()) {
        if (u == parent) continue;
        out.children.emplace_back();
        build_rooted(g, u, v, out.children.back());
    }
}

} // namespace

RootedTree to_rooted(const Graph& g, int root) {
    if (g.order() < 1 || root < 0 || root >= g.order())
        throw DomainError("to_rooted: root out of range");
    if (g.edge_count() != g.order() - 1 || components(g).size() != 1)
        throw DomainError("to_rooted: graph is not a tree");
    RootedTree t;
    build_rooted(g, root, -1, t);
    return t;
}

std::string free_tree_code(const Graph& g) {
    if (g.order() == 1) return "()";
    if (g.edge_count() != g.order() - 1 || components(g).size() != 1)
        throw DomainError("free_tree_code: graph is not a tree");

    // Peel leaves until one or two center vertices remain.
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    VertexSet alive = g.vertices();
    for (int v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int remaining = g.order();
    while (remaining > 2) {
        std::vector<int> leaves;
        for (int v : alive.to_vector())
            if (deg[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
        for (int v : leaves) {
            alive.remove(v);
            --remaining;
            for (int u : (g.neighbors(v) & alive).to_vector()) --deg[static_cast<std::size_t>(u)];
        }
    }
    std::string best;
    for (int c : alive.to_vector()) {
        std::string code = rooted_code(to_rooted(g, c));
        if (best.empty() || code < best) best = code;
    }
    return best;
}

} // namespace dissoc
