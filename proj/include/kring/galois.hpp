#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kring/cyclotomic.hpp"
#include "kring/error.hpp"
#include "kring/numeric.hpp"
#include "kring/verlinde.hpp"

namespace kring {

/// The group (Z/p)^x / {+-1} acts on the basis b_e of the real cyclotomic
/// field through its exponents; classes are represented by 1..(p-1)/2.
inline long galois_class(long p, long x) {
    long r = ((x % p) + p) % p;
    if (r == 0) throw InvalidInput("galois_class: value divisible by p");
    return std::min(r, p - r);
}

/// Orbits of the order-m subgroup of (Z/p)^x / {+-1} on exponent classes.
struct GaloisOrbitData {
    long p = 0;
    long m = 0;                            // subgroup order, divides (p-1)/2
    long k = 0;                            // orbit count, k = (p-1)/(2m)
    std::vector<long> subgroup;            // sorted classes forming the subgroup
    std::vector<std::vector<long>> orbits; // sorted; orbit list ascending by minimum

    /// Orbit sum x_i = sum of b_e over the i-th orbit.
    CycloReal orbit_sum(size_t i) const {
        CycloReal x(p);
        for (long e : orbits.at(i)) x.add_exponent(e, Rat(1));
        return x;
    }

    size_t orbit_of_class(long e) const {
        for (size_t i = 0; i < orbits.size(); ++i)
            if (std::binary_search(orbits[i].begin(), orbits[i].end(), e)) return i;
        throw InvalidInput("orbit_of_class: class out of range");
    }

    /// Orbit processing order for the given parity: the orbit containing
    /// the class of 1 goes last for the odd-index family and first for the
    /// even-index family; all other orbits stay in ascending order.
    std::vector<size_t> orbit_order(bool odd_parity) const {
        size_t special = orbit_of_class(1);
        std::vector<size_t> order;
        for (size_t i = 0; i < orbits.size(); ++i)
            if (i != special) order.push_back(i);
        if (odd_parity)
            order.push_back(special);
        else
            order.insert(order.begin(), special);
        return order;
    }
};

inline GaloisOrbitData galois_orbits(long p, long m) {
    require_verlinde_prime(p);
    long g = (p - 1) / 2;
    if (m < 1 || g % m != 0)
        throw InvalidInput("galois_orbits: order " + std::to_string(m) +
                           " does not divide " + std::to_string(g));
    GaloisOrbitData data;
    data.p = p;
    data.m = m;
    data.k = g / m;

    // The quotient group is cyclic of order (p-1)/2, generated by the class
    // of a primitive root; the unique order-m subgroup is generated by its
    // (g/m)-th power.
    long root = primitive_root_mod(p);
    long gen = 1;
    for (long i = 0; i < g / m; ++i) gen = galois_class(p, gen * root);
    std::set<long> sub;
    long h = 1;
    for (long i = 0; i < m; ++i) {
        sub.insert(h);
        h = galois_class(p, h * gen);
    }
    if (static_cast<long>(sub.size()) != m)
        throw InternalCheckFailure("galois_orbits: subgroup has wrong order");
    data.subgroup.assign(sub.begin(), sub.end());

    std::vector<bool> seen(g + 1, false);
    for (long e = 1; e <= g; ++e) {
        if (seen[e]) continue;
        std::set<long> orb;
        for (long s : data.subgroup) orb.insert(galois_class(p, s * e));
        for (long x : orb) seen[x] = true;
        data.orbits.emplace_back(orb.begin(), orb.end());
    }
    if (static_cast<long>(data.orbits.size()) != data.k)
        throw InternalCheckFailure("galois_orbits: wrong orbit count");
    return data;
}

/// Coordinates of the orbit sums over the simple objects of one parity.
///
/// Odd family: rows are vectors over (L_1, L_3, ..., L_{p-2}); each class e
/// is rewritten through its even representative t (t = e if e is even, else
/// p - e) as L_{t+1} - L_{t-1}, with t = p-1 contributing -L_{p-2}.
/// Even family: rows are vectors over (L_2, L_4, ..., L_{p-1}); each class
/// uses its odd representative t as L_{t+1} - L_{t-1}, with t = 1
/// contributing L_2.
struct LExpansion {
    long p = 0;
    bool odd_parity = true;
    std::vector<size_t> orbit_order;     // source orbit per row
    std::vector<Vec> rows;               // one coordinate vector per orbit
};

inline LExpansion l_expansion_of_orbit_sums(const GaloisOrbitData& data, bool odd_parity) {
    LExpansion ex;
    ex.p = data.p;
    ex.odd_parity = odd_parity;
    ex.orbit_order = data.orbit_order(odd_parity);
    long half = (data.p - 1) / 2;
    for (size_t idx : ex.orbit_order) {
        Vec row(half, Int(0));
        for (long e : data.orbits[idx]) {
            if (odd_parity) {
                long t = (e % 2 == 0) ? e : data.p - e;
                if (t == data.p - 1) {
                    row[(data.p - 3) / 2] -= 1;            // -L_{p-2}
                } else {
                    row[t / 2] += 1;                       // +L_{t+1}, t+1 odd
                    row[t / 2 - 1] -= 1;                   // -L_{t-1}
                }
            } else {
                long t = (e % 2 == 1) ? e : data.p - e;
                if (t == 1) {
                    row[0] += 1;                           // +L_2
                } else {
                    row[(t + 1) / 2 - 1] += 1;             // +L_{t+1}, t+1 even
                    row[(t - 1) / 2 - 1] -= 1;             // -L_{t-1}
                }
            }
        }
        ex.rows.push_back(std::move(row));
    }
    return ex;
}

/// Check that each expansion row reproduces its orbit sum under the field
/// embedding of the corresponding graded piece.
inline bool l_expansion_consistent(const GaloisOrbitData& data, const LExpansion& ex) {
    for (size_t r = 0; r < ex.rows.size(); ++r) {
        CycloReal target = data.orbit_sum(ex.orbit_order[r]);
        if (ex.odd_parity) {
            if (embed_plus(data.p, ex.rows[r]) != target) return false;
        } else {
            Vec full(data.p - 1, Int(0));
            for (long a = 0; a < (data.p - 1) / 2; ++a) full[2 * a + 1] = ex.rows[r][a];
            CycloPair img = embed_full(data.p, full);
            if (!img.first.is_zero() || img.second != target) return false;
        }
    }
    return true;
}

/// The second Adams operation on the odd-index subring matches the
/// squaring automorphism z -> z^2 under the field embedding.
inline bool adams_embedding_commutes(long p) {
    BasedRing plus = build_verlinde_plus(p);
    IMat psi = adams_verlinde_plus(p);
    for (long a = 0; a < (p - 1) / 2; ++a) {
        Vec e = plus.basis_vector(a);
        CycloReal lhs = embed_plus(p, psi.apply(e));
        CycloReal rhs = squaring_endomorphism(embed_plus(p, e));
        if (lhs != rhs) return false;
    }
    return true;
}

/// The full embedding is multiplicative: image of L_r L_s equals the
/// graded product of the images, for all basis pairs.
inline bool embedding_multiplicative(long p) {
    BasedRing full = build_verlinde(p);
    for (long r = 0; r < p - 1; ++r) {
        for (long s = r; s < p - 1; ++s) {
            Vec prod = full.multiply(full.basis_vector(r), full.basis_vector(s));
            CycloPair lhs = embed_full(p, prod);
            CycloPair rhs = embed_full_basis(p, r + 1) * embed_full_basis(p, s + 1);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}
