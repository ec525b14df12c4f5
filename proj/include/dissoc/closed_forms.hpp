#ifndef DISSOC_CLOSED_FORMS_HPP
#define DISSOC_CLOSED_FORMS_HPP

#include "dissoc/family_id.hpp"

#include <string>
#include <vector>

namespace dissoc::closed_form {

// diss(P_n) = ceil(2n/3), diss(C_n) = floor(2n/3).
long long diss_path(long long n);
long long diss_cycle(long long n);

// m(P_n): (n+3)(n+6)/18, (n+2)/3, or 1 by n mod 3 = 0, 1, 2.
long long m_path(long long n);

// m(C_n): 3, n(n+5)/6, or n by n mod 3 = 0, 1, 2.
long long m_cycle(long long n);

// (m(C_k,u^-), m(C_k,u^0), m(C_k,u^1)) for any cycle vertex u.
struct AnchorSplit {
    long long minus = 0;
    long long zero = 0;
    long long one = 0;

    long long total() const { return minus + zero + one; }
    friend bool operator==(const AnchorSplit&, const AnchorSplit&) = default;
};
AnchorSplit anchor_split(long long k);

// f(x) = 3^(x-1) + x + 1 and g(x) = 3^(x-1), x >= 1.
long long f(long long x);
long long g(long long x);

// h over component orders n_1..n_x (each divisible by 3):
//   1 for x = 0; 3^(n_1/3 - 1) + 1 for x = 1;
//   prod 3^(n_i/3-1) + sum_j prod_{i != j} 3^(n_i/3-1) for x > 1.
long long h(const std::vector<long long>& tree_orders);

// Extremal counts: trees of order n >= 3, forests, forests with >= 2
// components all of order >= 3 (n >= 6), and trees outside H (n = 0 mod 3).
long long tree_max(long long n);
long long forest_max(long long n);
long long forest_allbig_max(long long n);
long long nonH_tree_max(long long n);

struct BoundCandidate {
    std::string name; // "x1".."x4", "y1".."y4", or "main" for single-formula branches
    long long value = 0;
};

struct BoundResult {
    long long value = 0;                  // max over candidates
    std::vector<BoundCandidate> candidates;
    std::vector<FamilyId> families;       // predicted extremal families (union on ties)
};

// The maximum of m(G) over P(n,k), selected by k mod 3 and n mod 3, together
// with the families attaining it.  Hypotheses: k >= 3, and n >= k+4 when
// k = 0 mod 3, n >= k+3 otherwise; out-of-hypothesis (n,k) is a DomainError
// (small cases follow different rules and are handled by the verifier).
BoundResult theorem_bound(long long n, long long k);

// Smallest n the theorem governs for this k.
long long theorem_min_n(long long k);

} // namespace dissoc::closed_form

#endif
