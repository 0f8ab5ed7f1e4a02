#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace qecc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned long long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Largest s with s*s <= x (x >= 0).
inline BigInt isqrt_floor(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative");
    if (x == 0) return 0;
    BigInt s = BigInt(1) << (unsigned)((boost::multiprecision::msb(x) / 2) + 1);
    for (;;) {
        BigInt t = (s + x / s) / 2;
        if (t >= s) break;
        s = t;
    }
    return s;
}

inline BigInt rat_floor(const BigRat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

}  // namespace qecc
