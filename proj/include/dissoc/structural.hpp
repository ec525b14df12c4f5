#ifndef DISSOC_STRUCTURAL_HPP
#define DISSOC_STRUCTURAL_HPP

#include "dissoc/closed_forms.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/potted.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace dissoc {

// Tree quantities entering the potted decomposition, per component T_i with
// attachment vertex v_i: m(T_i), diss(T_i), mbar(T_i - v_i), mbar(T_i - N(v_i)).
struct TreeTerms {
    long long m = 0;
    long long diss = 0;
    long long mbar_v = 0;
    long long mbar_nv = 0;
};

struct DecompositionTerms {
    closed_form::AnchorSplit split; // cycle anchor split at u
    std::vector<TreeTerms> trees;   // one entry per component of G - C_k
};

struct PottedCount {
    long long diss = 0;
    long long m = 0;
    ClassifiedCounts at_u; // classified at the attachment vertex u
};

// Concurrent-safe memo of tree quantities, keyed by the canonical code of
// the component rooted at its attachment vertex.
class TreeTermsCache {
public:
    TreeTerms get(const RootedTree& rooted_at_v, int cap);

private:
    std::mutex mutex_;
    std::unordered_map<std::string, TreeTerms> map_;
};

DecompositionTerms decompose(const PottedGraph& p, TreeTermsCache& cache,
                             int cap = kDefaultOracleCap);

// Exact m(G), diss(G) and the u-classified triple via the decomposition
//   m(G,u^-) = m(C_k,u^-) prod m(T_i)
//   m(G,u^0) = m(C_k,u^0) prod mbar(T_i - v_i)
//   m(G,u^1) = m(C_k,u^1) prod mbar(T_i - v_i)
//            + m(C_k,u^0) sum_j [ mbar(T_j - N(v_j)) prod_{i != j} mbar(T_i - v_i) ]
// and diss(G) = diss(C_k) + sum diss(T_i).  Only the tree components are ever
// searched, so the cost is independent of the cycle order.
PottedCount count_potted(const PottedGraph& p, TreeTermsCache& cache,
                         int cap = kDefaultOracleCap);
PottedCount count_potted(const PottedGraph& p); // one-shot cache

// diss additivity across a cut vertex u in V1 (no edges between V1 \ {u}
// and the rest, diss(G[V1] - u) = diss(G[V1])).  Returns the evaluated
// equality diss(G) = diss(G[V1]) + diss(G - V1); throws PreconditionViolated
// when the hypotheses fail.
bool check_cut_vertex_additivity(const Graph& g, VertexSet v1, int u,
                                 int cap = kDefaultOracleCap);

// MD(G) ⊆ MD(G[V1]) ⊕ MD(G - V1) under the diss additivity hypothesis;
// returns the evaluated inclusion (always true when the hypothesis holds).
bool check_oplus_subset(const Graph& g, VertexSet v1, int cap = kDefaultOracleCap);

} // namespace dissoc

#endif
