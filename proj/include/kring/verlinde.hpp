#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/matrix.hpp"
#include "kring/numeric.hpp"

namespace kring {

inline void require_verlinde_prime(long p) {
    if (p < 5 || !is_prime(p))
        throw InvalidInput("expected a prime p >= 5, got " + std::to_string(p));
}

/// Fusion ring on simples L_1, ..., L_{p-1} with
/// L_r L_s = sum_{l=1}^{min(r,s,p-r,p-s)} L_{|r-s|+2l-1}; all self-dual.
inline BasedRing build_verlinde(long p) {
    require_verlinde_prime(p);
    int n = static_cast<int>(p - 1);
    std::vector<std::string> labels;
    for (int t = 1; t <= n; ++t) labels.push_back("L" + std::to_string(t));
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = i;
    std::vector<int64_t> tensor(static_cast<size_t>(n) * n * n, 0);
    for (long r = 1; r <= n; ++r)
        for (long s = 1; s <= n; ++s) {
            long mn = std::min(std::min(r, s), std::min(p - r, p - s));
            for (long l = 1; l <= mn; ++l) {
                long t = std::labs(r - s) + 2 * l - 1;
                tensor[((static_cast<size_t>(r - 1) * n) + (s - 1)) * n + (t - 1)] = 1;
            }
        }
    return BasedRing(std::move(labels), 0, std::move(dual), std::move(tensor));
}

/// Subring spanned by the odd-index simples L_1, L_3, ..., L_{p-2}.
inline BasedRing build_verlinde_plus(long p) {
    require_verlinde_prime(p);
    BasedRing full = build_verlinde(p);
    int n = static_cast<int>((p - 1) / 2);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back("L" + std::to_string(2 * a + 1));
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = i;
    std::vector<int64_t> tensor(static_cast<size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                tensor[(static_cast<size_t>(a) * n + b) * n + c] = full.N(2 * a, 2 * b, 2 * c);
    return BasedRing(std::move(labels), 0, std::move(dual), std::move(tensor));
}

/// Matrix of the second Adams operation on the full Verlinde ring
/// (column t-1 = image of L_t):
///   psi2(L_t) = sum_{s=1}^{min(t,p-t)} (-1)^(s+1) L_{2s-1}   for odd t,
/// and the negative of that sum for even t.
inline IMat adams_verlinde(long p) {
    require_verlinde_prime(p);
    int n = static_cast<int>(p - 1);
    IMat m(n, n);
    for (long t = 1; t <= n; ++t) {
        long mn = std::min(t, p - t);
        for (long s = 1; s <= mn; ++s) {
            int sign = (s % 2 == 1) ? 1 : -1;
            if (t % 2 == 0) sign = -sign;
            m.at(static_cast<int>(2 * s - 2), static_cast<int>(t - 1)) = sign;
        }
    }
    return m;
}

/// Restriction of the second Adams operation to the odd-index subring.
inline IMat adams_verlinde_plus(long p) {
    require_verlinde_prime(p);
    int n = static_cast<int>((p - 1) / 2);
    IMat m(n, n);
    for (int a = 0; a < n; ++a) {
        long t = 2 * a + 1;
        long mn = std::min(t, p - t);
        for (long s = 1; s <= mn; ++s)
            m.at(static_cast<int>(s - 1), a) = (s % 2 == 1) ? 1 : -1;
    }
    return m;
}

struct SymExtSquares {
    Vec sym, ext;
};

/// Symmetric and exterior squares of L_t from the square and the Adams
/// image: S^2 = (L_t^2 + psi2(L_t))/2, Lambda^2 = (L_t^2 - psi2(L_t))/2.
/// Integrality and nonnegativity of both halves are enforced.
inline SymExtSquares sym_ext_squares(long p, long t) {
    require_verlinde_prime(p);
    if (t < 1 || t > p - 1) throw InvalidInput("sym_ext_squares: t out of range");
    BasedRing ring = build_verlinde(p);
    IMat psi = adams_verlinde(p);
    Vec sq = ring.multiply(ring.basis_vector(static_cast<int>(t - 1)),
                           ring.basis_vector(static_cast<int>(t - 1)));
    Vec ps = psi.apply(ring.basis_vector(static_cast<int>(t - 1)));
    SymExtSquares out{Vec(ring.rank()), Vec(ring.rank())};
    for (int k = 0; k < ring.rank(); ++k) {
        Int s = sq[k] + ps[k];
        Int e = sq[k] - ps[k];
        if (s % 2 != 0 || e % 2 != 0)
            throw InternalCheckFailure("sym_ext_squares: parity violation at coordinate " +
                                       std::to_string(k));
        out.sym[k] = s / 2;
        out.ext[k] = e / 2;
        if (sgn(out.sym[k]) < 0 || sgn(out.ext[k]) < 0)
            throw InternalCheckFailure("sym_ext_squares: negative multiplicity at coordinate " +
                                       std::to_string(k));
    }
    return out;
}

struct CongruenceCheck {
    bool ok = true;
    std::string witness;
};

/// The assignment L_t -> t mod p must be a ring homomorphism:
/// r*s = sum of the indices in L_r L_s modulo p, for all pairs.
inline CongruenceCheck dim_mod_p_check(long p) {
    require_verlinde_prime(p);
    for (long r = 1; r <= p - 1; ++r)
        for (long s = 1; s <= p - 1; ++s) {
            long mn = std::min(std::min(r, s), std::min(p - r, p - s));
            long sum = 0;
            for (long l = 1; l <= mn; ++l) sum += std::labs(r - s) + 2 * l - 1;
            if ((sum - r * s) % p != 0)
                return CongruenceCheck{false, "r = " + std::to_string(r) + ", s = " + std::to_string(s)};
        }
    return CongruenceCheck{};
}

/// All nonnegative fixed points of the second Adams operation with every
/// coefficient at most `bound`, in graded-lexicographic order. The scan
/// runs over the odd-index coordinates only (the Adams image lies in the
/// odd span, so fixed points must too) and each surviving candidate is
/// verified exactly against the Adams matrix.
inline std::vector<Vec> fixed_nonneg_points(long p, long bound, double budget = 1e8) {
    require_verlinde_prime(p);
    if (bound < 0) throw InvalidInput("fixed_nonneg_points: bound must be nonnegative");
    int m = static_cast<int>((p - 1) / 2);
    double estimate = std::pow(static_cast<double>(bound + 1), m);
    if (estimate > budget)
        throw BudgetExceeded("fixed_nonneg_points: scan over " + std::to_string(m) +
                                 " odd coordinates with bound " + std::to_string(bound) +
                                 " is too large",
                             estimate, budget);
    IMat psi = adams_verlinde(p);
    int n = static_cast<int>(p - 1);
    std::vector<Vec> found;
    std::vector<long> c(m, 0);
    while (true) {
        // necessary condition from the L_1 coordinate of the fixed-point
        // equation: the odd coefficients above L_1 must sum to zero
        long tail = 0;
        for (int j = 1; j < m; ++j) tail += c[j];
        if (tail == 0) {
            Vec v(n, Int(0));
            for (int j = 0; j < m; ++j) v[2 * j] = c[j];
            if (psi.apply(v) == v) found.push_back(v);
        }
        int pos = m - 1;
        while (pos >= 0 && c[pos] == bound) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
    }
    std::sort(found.begin(), found.end(), [](const Vec& a, const Vec& b) {
        Int ta(0), tb(0);
        for (const auto& x : a) ta += x;
        for (const auto& x : b) tb += x;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return found;
}

}
