#pragma once

// Exact arithmetic aliases. Everything in this library is computed over Q;
// intermediate integers (lcm of weights, mu^mu products) overflow 64 bits
// long before mu hits the CLI cap, so boost multiprecision is non-optional.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace orbimirror {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// floor(q) for possibly negative q.
inline Int rfloor(const Rational& q) {
    Int n = num(q), d = den(q); // d > 0 canonically
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

// Fractional part {q} in [0,1).
inline Rational frac(const Rational& q) { return q - Rational(rfloor(q)); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Canonical "p/q" (or "p" when integral) — the only serialization of
// rationals anywhere in output.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// q^e for integer e of either sign.
inline Rational rpow(const Rational& q, long e) {
    if (e >= 0) {
        return Rational(ipow(num(q), static_cast<unsigned long>(e)),
                        ipow(den(q), static_cast<unsigned long>(e)));
    }
    return Rational(ipow(den(q), static_cast<unsigned long>(-e)),
                    ipow(num(q), static_cast<unsigned long>(-e)));
}

} // namespace orbimirror
