#include "dissoc/oracle.hpp"

#include "dissoc/checked_arith.hpp"

#include <algorithm>

namespace dissoc {

namespace {

// Shared three-way branch-and-bound.  Invariant: an undecided vertex never
// has a chosen neighbor, because choosing a vertex immediately decides its
// whole neighborhood.  Each dissociation set is therefore reached exactly
// once, and `leaf` fires once per maximal assignment.
template <class Leaf>
class Search {
public:
    Search(const Graph& g, Leaf leaf) : g_(g), leaf_(leaf) {}

    void run() {
        best_ = 0;
        recurse(g_.vertices().bits, 0, 0);
    }

    int best() const { return best_; }
    void set_best(int b) { best_ = b; }

private:
    void recurse(std::uint64_t undecided, std::uint64_t chosen, int size) {
        if (size + __builtin_popcountll(undecided) < best_) return; // cannot reach a tie
        if (undecided == 0) {
            if (size > best_) best_ = size;
            leaf_(chosen, size, best_);
            return;
        }
        int v = __builtin_ctzll(undecided);
        std::uint64_t vbit = 1ULL << v;
        std::uint64_t nbh = g_.neighbors(v).bits;

        recurse(undecided & ~vbit, chosen, size);                          // exclude v
        recurse(undecided & ~vbit & ~nbh, chosen | vbit, size + 1);        // v isolated
        for (std::uint64_t m = nbh & undecided; m; m &= m - 1) {           // v paired with u
            int u = __builtin_ctzll(m);
            std::uint64_t ubit = 1ULL << u;
            std::uint64_t nbu = g_.neighbors(u).bits;
            recurse(undecided & ~vbit & ~ubit & ~nbh & ~nbu,
                    chosen | vbit | ubit, size + 2);
        }
    }

    const Graph& g_;
    Leaf leaf_;
    int best_;
};

void check_cap(const Graph& g, int cap, const char* who) {
    if (g.order() > cap)
        throw CapExceeded(std::string(who) + ": order " + std::to_string(g.order()) +
                          " exceeds cap " + std::to_string(cap));
}

std::uint64_t bit_reverse(std::uint64_t x) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) r |= ((x >> i) & 1ULL) << (63 - i);
    return r;
}

} // namespace

DissResult solve(const Graph& g, SolveMode mode, int cap) {
    check_cap(g, cap, "solve");
    if (g.order() == 0) {
        DissResult r{0, 1, {}};
        if (mode == SolveMode::Enumerate) r.sets.push_back(VertexSet());
        return r;
    }

    DissResult result;
    long long count = 0;
    int best_seen = -1;
    std::vector<VertexSet> sets;
    bool enumerate = (mode == SolveMode::Enumerate);

    auto leaf = [&](std::uint64_t chosen, int size, int) {
        if (size < best_seen) return;
        if (size > best_seen) {
            best_seen = size;
            count = 0;
            if (enumerate) sets.clear();
        }
        ++count;
        if (enumerate) sets.push_back(VertexSet(chosen));
    };
    Search search(g, leaf);
    search.run();

    result.diss = best_seen;
    result.count = count;
    if (enumerate) {
        std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
            return bit_reverse(a.bits) < bit_reverse(b.bits);
        });
        result.sets = std::move(sets);
    }
    return result;
}

ClassifiedCounts classify(const Graph& g, int v, int cap) {
    check_cap(g, cap, "classify");
    if (v < 0 || v >= g.order()) throw DomainError("classify: vertex out of range");

    ClassifiedCounts counts;
    int best_seen = -1;
    std::uint64_t vbit = 1ULL << v;
    std::uint64_t nbh = g.neighbors(v).bits;

    auto leaf = [&](std::uint64_t chosen, int size, int) {
        if (size < best_seen) return;
        if (size > best_seen) {
            best_seen = size;
            counts = ClassifiedCounts{};
        }
        if (!(chosen & vbit))
            ++counts.minus;
        else if ((chosen & nbh) == 0)
            ++counts.zero;
        else
            ++counts.one;
    };
    Search search(g, leaf);
    search.run();
    return counts;
}

long long restricted_count(const Graph& t, VertexSet removed, int cap) {
    if (!removed.subset_of(t.vertices()))
        throw DomainError("restricted_count: removed set not within the graph");
    VertexSet keep = t.vertices() - removed;
    if (keep.empty()) return 0;
    int full = solve(t, SolveMode::Count, cap).diss;
    DissResult sub = solve(induced_subgraph(t, keep).graph, SolveMode::Count, cap);
    return sub.diss == full ? sub.count : 0;
}

std::vector<VertexSet> oplus_join(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    std::vector<VertexSet> out;
    out.reserve(checked_mul(static_cast<long long>(a.size()), static_cast<long long>(b.size())));
    for (VertexSet x : a)
        for (VertexSet y : b) out.push_back(x | y);
    return out;
}

} // namespace dissoc
