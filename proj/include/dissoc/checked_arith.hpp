#ifndef DISSOC_CHECKED_ARITH_HPP
#define DISSOC_CHECKED_ARITH_HPP

#include "dissoc/errors.hpp"

#include <cstdint>

namespace dissoc {

// All counts and bound values are exact 64-bit integers; any overflow is a
// bug in the caller's budget, so it throws instead of wrapping.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer add overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer mul overflow");
    return r;
}

// 3^e, e >= 0.
inline long long checked_pow3(long long e) {
    if (e < 0) throw DomainError("checked_pow3: negative exponent");
    long long r = 1;
    for (long long i = 0; i < e; ++i) r = checked_mul(r, 3);
    return r;
}

} // namespace dissoc

#endif
