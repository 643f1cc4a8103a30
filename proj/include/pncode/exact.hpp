#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace pncode {

// Exact arbitrary-precision integer / rational used everywhere a count,
// moment or bound is computed. No floating point flows through these paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// C(n, k), exact. The running product stays integral at every step.
inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

// b^e mod mod for mod < 2^32 (products fit in 64 bits).
inline std::uint64_t mod_pow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

}  // namespace pncode
