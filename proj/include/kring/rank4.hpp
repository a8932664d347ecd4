#pragma once

#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/numeric.hpp"

namespace kring {

/// Commutative based ring with basis 1, X, Y, Z, duality 1* = 1, X* = Z,
/// Y* = Y (exactly two self-dual basis elements) and
///   X^2 = pX + lY + cZ        XY = qX + kY + lZ     XZ = 1 + pX + qY + pZ
///   Y^2 = 1 + kX + eY + kZ    YZ = lX + kY + qZ     Z^2 = cX + lY + pZ.
/// Associativity is equivalent to the four integer relations checked below.
/// Relabeling X <-> Z maps the ring to itself with identical parameters, so
/// no tuple normalization is needed.
struct Rank4Params {
    Int c, e, k, l, p, q;

    bool operator==(const Rank4Params& o) const {
        return c == o.c && e == o.e && k == o.k && l == o.l && p == o.p && q == o.q;
    }
    bool operator<(const Rank4Params& o) const {
        if (c != o.c) return c < o.c;
        if (e != o.e) return e < o.e;
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        if (p != o.p) return p < o.p;
        return q < o.q;
    }

    std::string to_string() const {
        return "(" + c.get_str() + "," + e.get_str() + "," + k.get_str() + "," +
               l.get_str() + "," + p.get_str() + "," + q.get_str() + ")";
    }
};

inline bool rank4_relations_hold(const Rank4Params& t) {
    const Int &c = t.c, &e = t.e, &k = t.k, &l = t.l, &p = t.p, &q = t.q;
    if (k * l + l * c != l * p + k * q) return false;
    if (k * p + l * e + k * c != 2 * l * q + k * k) return false;
    if (l * l + c * c != 1 + q * q + p * p) return false;
    if (l * l + k * k + q * q != 1 + 2 * p * k + q * e) return false;
    return true;
}

/// All tuples with entries in [0, bound] satisfying the four relations;
/// lexicographic order in (c, e, k, l, p, q).
inline std::vector<Rank4Params> enumerate_rank4(long bound) {
    if (bound < 0) throw InvalidInput("enumerate_rank4: bound must be >= 0");
    std::vector<Rank4Params> out;
    for (long c = 0; c <= bound; ++c)
        for (long e = 0; e <= bound; ++e)
            for (long k = 0; k <= bound; ++k)
                for (long l = 0; l <= bound; ++l)
                    for (long p = 0; p <= bound; ++p)
                        for (long q = 0; q <= bound; ++q) {
                            Rank4Params t{Int(c), Int(e), Int(k), Int(l), Int(p), Int(q)};
                            if (rank4_relations_hold(t)) out.push_back(t);
                        }
    return out;
}

inline BasedRing build_rank4(const Rank4Params& t) {
    if (sgn(t.c) < 0 || sgn(t.e) < 0 || sgn(t.k) < 0 || sgn(t.l) < 0 ||
        sgn(t.p) < 0 || sgn(t.q) < 0)
        throw InvalidInput("build_rank4: parameters must be nonnegative");
    if (!rank4_relations_hold(t))
        throw InvalidInput("build_rank4: parameters violate the defining relations");
    int64_t c = t.c.get_si(), e = t.e.get_si(), k = t.k.get_si(), l = t.l.get_si(),
            p = t.p.get_si(), q = t.q.get_si();
    std::vector<int64_t> tensor(64, 0);
    auto set = [&](int i, int j, int64_t c1, int64_t cx, int64_t cy, int64_t cz) {
        int64_t row[4] = {c1, cx, cy, cz};
        for (int s = 0; s < 4; ++s) {
            tensor[(i * 4 + j) * 4 + s] = row[s];
            tensor[(j * 4 + i) * 4 + s] = row[s];
        }
    };
    set(0, 0, 1, 0, 0, 0);
    set(0, 1, 0, 1, 0, 0);
    set(0, 2, 0, 0, 1, 0);
    set(0, 3, 0, 0, 0, 1);
    set(1, 1, 0, p, l, c);
    set(1, 2, 0, q, k, l);
    set(1, 3, 1, p, q, p);
    set(2, 2, 1, k, e, k);
    set(2, 3, 0, l, k, q);
    set(3, 3, 0, c, l, p);
    BasedRing r({"1", "X", "Y", "Z"}, 0, {0, 3, 2, 1}, std::move(tensor));
    AxiomCheck check = r.verify_axioms();
    if (!check.ok)
        throw InternalCheckFailure("build_rank4: axiom " + check.axiom + " failed for " +
                                   t.to_string() + " (" + check.witness + ")");
    return r;
}

}
