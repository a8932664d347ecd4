#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "kring/error.hpp"

namespace kring {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline Int abs_int(const Int& x) { return abs(x); }

inline bool is_square(const Int& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& x) {
    if (sgn(x) < 0) throw InvalidInput("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long pow_mod(long base, long exp, long mod) {
    if (mod <= 0) throw InvalidInput("pow_mod: modulus must be positive");
    long result = 1;
    long b = ((base % mod) + mod) % mod;
    long e = exp;
    while (e > 0) {
        if (e & 1) result = static_cast<long>((__int128)result * b % mod);
        b = static_cast<long>((__int128)b * b % mod);
        e >>= 1;
    }
    return result;
}

/// Deterministic primality test by trial division; intended for small moduli.
inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Smallest generator of (Z/p)^* for prime p.
inline long primitive_root_mod(long p) {
    if (!is_prime(p)) throw InvalidInput("primitive_root_mod: p must be prime");
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw InternalCheckFailure("primitive_root_mod: no generator found");
}

/// Multiplicative order of a in (Z/p)^* for prime p, gcd(a, p) = 1.
inline long order_mod(long a, long p) {
    long x = ((a % p) + p) % p;
    if (x == 0) throw InvalidInput("order_mod: a divisible by p");
    long ord = 1;
    long y = x;
    while (y != 1) {
        y = static_cast<long>((__int128)y * x % p);
        ++ord;
        if (ord > p) throw InternalCheckFailure("order_mod: runaway loop");
    }
    return ord;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

}
