#include "dissoc/closed_forms.hpp"

#include "dissoc/checked_arith.hpp"

#include <algorithm>

namespace dissoc::closed_form {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

} // namespace

long long diss_path(long long n) {
    require(n >= 1, "diss_path: n >= 1 required");
    return (2 * n + 2) / 3;
}

long long diss_cycle(long long n) {
    require(n >= 3, "diss_cycle: n >= 3 required");
    return 2 * n / 3;
}

long long m_path(long long n) {
    require(n >= 1, "m_path: n >= 1 required");
    switch (n % 3) {
        case 0: return checked_mul(n + 3, n + 6) / 18;
        case 1: return (n + 2) / 3;
        default: return 1;
    }
}

long long m_cycle(long long n) {
    require(n >= 3, "m_cycle: n >= 3 required");
    switch (n % 3) {
        case 0: return 3;
        case 1: return checked_mul(n, n + 5) / 6;
        default: return n;
    }
}

AnchorSplit anchor_split(long long k) {
    require(k >= 3, "anchor_split: k >= 3 required");
    switch (k % 3) {
        case 0: return {1, 0, 2};
        case 1:
            return {checked_mul(k + 2, k + 5) / 18, (k - 1) / 3,
                    checked_mul(k - 1, k + 2) / 9};
        default: return {(k + 1) / 3, 1, 2 * (k - 2) / 3};
    }
}

long long f(long long x) {
    require(x >= 1, "f: x >= 1 required");
    return checked_add(checked_pow3(x - 1), x + 1);
}

long long g(long long x) {
    require(x >= 1, "g: x >= 1 required");
    return checked_pow3(x - 1);
}

long long h(const std::vector<long long>& tree_orders) {
    for (long long ni : tree_orders)
        require(ni >= 3 && ni % 3 == 0, "h: component orders must be multiples of 3, >= 3");
    const std::size_t x = tree_orders.size();
    if (x == 0) return 1;
    if (x == 1) return checked_add(checked_pow3(tree_orders[0] / 3 - 1), 1);
    long long prod = 1;
    for (long long ni : tree_orders) prod = checked_mul(prod, checked_pow3(ni / 3 - 1));
    long long sum = 0;
    for (std::size_t j = 0; j < x; ++j) {
        long long cof = 1;
        for (std::size_t i = 0; i < x; ++i)
            if (i != j) cof = checked_mul(cof, checked_pow3(tree_orders[i] / 3 - 1));
        sum = checked_add(sum, cof);
    }
    return checked_add(prod, sum);
}

long long tree_max(long long n) {
    require(n >= 3, "tree_max: n >= 3 required");
    switch (n % 3) {
        case 0: return checked_add(checked_pow3(n / 3 - 1), n / 3 + 1);
        case 1: return checked_add(checked_pow3((n - 1) / 3 - 1), 1);
        default: return checked_pow3((n - 2) / 3 - 1);
    }
}

long long forest_max(long long n) {
    require(n >= 1, "forest_max: n >= 1 required");
    return checked_pow3(n / 3);
}

long long forest_allbig_max(long long n) {
    require(n >= 6, "forest_allbig_max: n >= 6 required");
    switch (n % 3) {
        case 0: return checked_pow3(n / 3);
        case 1: return checked_mul(2, checked_pow3((n - 1) / 3 - 1));
        default: return checked_mul(4, checked_pow3((n - 2) / 3 - 2));
    }
}

long long nonH_tree_max(long long n) {
    require(n >= 3 && n % 3 == 0, "nonH_tree_max: n >= 3 with n = 0 (mod 3) required");
    return checked_add(checked_pow3(n / 3 - 1), 1);
}

long long theorem_min_n(long long k) {
    require(k >= 3, "theorem_min_n: k >= 3 required");
    return k % 3 == 0 ? k + 4 : k + 3;
}

namespace {

// Candidates are evaluated scaled by 18 so the rational coefficients of the
// x/y constants stay in exact integers.
long long unscale18(long long v) {
    if (v % 18 != 0) throw OverflowError("theorem bound candidate not divisible by 18");
    return v / 18;
}

BoundResult pick_max(std::vector<BoundCandidate> cands,
                     const std::vector<FamilyId>& fams_per_cand) {
    BoundResult r;
    long long best = cands[0].value;
    for (const auto& c : cands) best = std::max(best, c.value);
    r.value = best;
    r.candidates = std::move(cands);
    for (std::size_t i = 0; i < r.candidates.size(); ++i)
        if (r.candidates[i].value == best) r.families.push_back(fams_per_cand[i]);
    return r;
}

} // namespace

BoundResult theorem_bound(long long n, long long k) {
    require(k >= 3, "theorem_bound: k >= 3 required");
    if (n < theorem_min_n(k))
        throw DomainError("theorem_bound: n below the theorem hypothesis for this k");

    const long long d = n - k;
    BoundResult r;

    if (k % 3 == 0) {
        switch (n % 3) {
            case 0:
                r.value = checked_add(checked_pow3(d / 3), d / 3 + 1);
                r.candidates = {{"main", r.value}};
                r.families = {FamilyId::G1};
                return r;
            case 1:
                r.value = checked_add(checked_pow3((d - 1) / 3), 1);
                r.candidates = {{"main", r.value}};
                r.families = {FamilyId::G2};
                return r;
            default:
                r.value = checked_pow3((d - 2) / 3);
                r.candidates = {{"main", r.value}};
                r.families = {FamilyId::G3, FamilyId::G4, FamilyId::G5, FamilyId::G6, FamilyId::G7};
                return r;
        }
    }

    if (k % 3 == 2) {
        switch (n % 3) {
            case 0: {
                long long x1 = checked_add(checked_mul(k, checked_pow3((d - 1) / 3 - 1)), (k + 1) / 3);
                long long x2 = checked_add(checked_mul(k + 1, checked_pow3((d - 1) / 3 - 1)), 1);
                return pick_max({{"x1", x1}, {"x2", x2}}, {FamilyId::G2, FamilyId::G9});
            }
            case 1:
                r.value = checked_mul(k + 1, checked_pow3((d - 2) / 3 - 1));
                r.candidates = {{"main", r.value}};
                r.families = {FamilyId::G6, FamilyId::G7};
                return r;
            default: {
                long long x3 = checked_add(
                    checked_add(checked_mul(k, checked_pow3(d / 3 - 1)),
                                checked_mul((k + 1) / 3, d / 3 + 1)),
                    1);
                long long x4 = checked_add(checked_mul(k + 1, checked_pow3(d / 3 - 1)), (n + k - 1) / 3);
                return pick_max({{"x3", x3}, {"x4", x4}}, {FamilyId::G1, FamilyId::G8});
            }
        }
    }

    // k = 1 (mod 3)
    switch (n % 3) {
        case 0:
            r.value = unscale18(checked_mul(checked_mul(k + 2, k + 5), checked_pow3((d - 2) / 3)));
            r.candidates = {{"main", r.value}};
            r.families = {FamilyId::G6, FamilyId::G7};
            return r;
        case 1: {
            long long y1 = unscale18(checked_add(
                checked_mul(checked_mul(k + 2, k + 5), checked_pow3(d / 3)),
                checked_mul(2, checked_mul(n + 5, k - 1))));
            long long y2 = unscale18(checked_add(
                checked_add(checked_mul(checked_mul(k, k + 5), checked_pow3(d / 3)),
                            checked_mul(6, k - 1)),
                checked_mul(checked_mul(k + 2, k + 5), d / 3 + 1)));
            return pick_max({{"y1", y1}, {"y2", y2}}, {FamilyId::G8, FamilyId::G1});
        }
        default: {
            long long y3 = unscale18(checked_add(
                checked_mul(checked_mul(k, k + 5), checked_pow3((d - 1) / 3)),
                checked_mul(k + 2, k + 5)));
            long long y4 = unscale18(checked_add(
                checked_mul(checked_mul(k + 2, k + 5), checked_pow3((d - 1) / 3)),
                checked_mul(6, k - 1)));
            return pick_max({{"y3", y3}, {"y4", y4}}, {FamilyId::G2, FamilyId::G9});
        }
    }
}

} // namespace dissoc::closed_form
