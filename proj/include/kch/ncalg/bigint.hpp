#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kch {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &x) { return x.str(); }

inline BigInt big_gcd(const BigInt &a, const BigInt &b) {
    return boost::multiprecision::gcd(a, b);
}

// Reduce x into [0, p).
inline int64_t mod_p(const BigInt &x, int64_t p) {
    BigInt r = x % p;
    if (r < 0)
        r += p;
    return static_cast<int64_t>(r);
}

inline int64_t pow_mod(int64_t base, int64_t exp, int64_t p) {
    base %= p;
    if (base < 0)
        base += p;
    int64_t result = 1 % p;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

// Inverse of a nonzero residue modulo a prime.
inline int64_t inv_mod(int64_t a, int64_t p) { return pow_mod(a, p - 2, p); }

} // namespace kch
