#pragma once

#include <cstdint>
#include <string>

#include "patmaj/error.hpp"

namespace patmaj {

// Exact counts. Every arithmetic step on counts goes through the checked
// helpers below; overflow surfaces as ResourceLimit instead of wrapping.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("count overflow in addition (exceeds 64 bits)");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("count overflow in multiplication (exceeds 64 bits)");
    return r;
}

inline Count binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > UINT64_MAX) throw ResourceLimit("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<Count>(r);
}

// floor(sqrt(x)) for x >= 0.
inline long long isqrt(long long x) {
    if (x < 0) throw InvalidInput("isqrt of a negative number");
    long long r = 0;
    long long bit = 1LL << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

}  // namespace patmaj
