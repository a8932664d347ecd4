#pragma once

#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/numeric.hpp"
#include "kring/ring_analysis.hpp"

namespace kring {

/// Commutative based ring with all-self-dual basis 1, X, Y and
///   X^2 = 1 + mX + kY,  XY = kX + lY,  Y^2 = 1 + lX + nY.
/// Such a ring exists iff k^2 + l^2 = kn + lm + 1; tuples are normalized
/// to l >= k, the swap (k,l,m,n) -> (l,k,n,m) exchanging X and Y.
struct Rank3Params {
    Int k, l, m, n;

    bool operator==(const Rank3Params& o) const {
        return k == o.k && l == o.l && m == o.m && n == o.n;
    }
    bool operator<(const Rank3Params& o) const {
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        if (m != o.m) return m < o.m;
        return n < o.n;
    }

    Rank3Params swapped() const { return Rank3Params{l, k, n, m}; }
    Rank3Params canonical() const {
        Rank3Params s = swapped();
        return (s < *this) ? s : *this;
    }

    std::string to_string() const {
        return "(" + k.get_str() + "," + l.get_str() + "," + m.get_str() + "," +
               n.get_str() + ")";
    }
};

inline bool rank3_relation_holds(const Rank3Params& t) {
    return t.k * t.k + t.l * t.l == t.k * t.n + t.l * t.m + 1;
}

/// All tuples with entries in [0, bound], l >= k, satisfying the relation;
/// lexicographic order.
inline std::vector<Rank3Params> enumerate_rank3(long bound) {
    if (bound < 0) throw InvalidInput("enumerate_rank3: bound must be >= 0");
    std::vector<Rank3Params> out;
    for (long k = 0; k <= bound; ++k)
        for (long l = k; l <= bound; ++l)
            for (long m = 0; m <= bound; ++m)
                for (long n = 0; n <= bound; ++n) {
                    Rank3Params t{Int(k), Int(l), Int(m), Int(n)};
                    if (rank3_relation_holds(t)) out.push_back(t);
                }
    return out;
}

inline BasedRing build_rank3(const Rank3Params& t) {
    if (sgn(t.k) < 0 || sgn(t.l) < 0 || sgn(t.m) < 0 || sgn(t.n) < 0)
        throw InvalidInput("build_rank3: parameters must be nonnegative");
    if (!rank3_relation_holds(t))
        throw InvalidInput("build_rank3: parameters violate the defining relation");
    int64_t k = t.k.get_si(), l = t.l.get_si(), m = t.m.get_si(), n = t.n.get_si();
    std::vector<int64_t> tensor(27, 0);
    auto set = [&](int i, int j, int64_t c1, int64_t cx, int64_t cy) {
        tensor[(i * 3 + j) * 3 + 0] = c1;
        tensor[(i * 3 + j) * 3 + 1] = cx;
        tensor[(i * 3 + j) * 3 + 2] = cy;
        tensor[(j * 3 + i) * 3 + 0] = c1;
        tensor[(j * 3 + i) * 3 + 1] = cx;
        tensor[(j * 3 + i) * 3 + 2] = cy;
    };
    set(0, 0, 1, 0, 0);
    set(0, 1, 0, 1, 0);
    set(0, 2, 0, 0, 1);
    set(1, 1, 1, m, k);
    set(1, 2, 0, k, l);
    set(2, 2, 1, l, n);
    BasedRing r({"1", "X", "Y"}, 0, {0, 1, 2}, std::move(tensor));
    AxiomCheck check = r.verify_axioms();
    if (!check.ok)
        throw InternalCheckFailure("build_rank3: axiom " + check.axiom + " failed for " +
                                   t.to_string() + " (" + check.witness + ")");
    return r;
}

struct Rank3Integrality {
    bool integral = false;
    bool closed_form = false;   // k = 0, m^2+4 and n^2+8 both squares
    std::string reason;
};

/// Integrality decided two independent ways: the closed-form square tests
/// (fpdim(X) rational forces k=0 and m^2+4 square; then fpdim(Y) rational
/// forces n^2+8 square) and the general Perron computation. Disagreement is
/// an internal error.
inline Rank3Integrality rank3_integrality_filter(const Rank3Params& t) {
    Rank3Integrality out;
    out.closed_form =
        sgn(t.k) == 0 && is_square(t.m * t.m + 4) && is_square(t.n * t.n + 8);
    out.integral = is_integral(build_rank3(t));
    if (out.integral != out.closed_form)
        throw InternalCheckFailure("rank3_integrality_filter: closed form disagrees with "
                                   "Perron computation at " + t.to_string());
    if (out.integral) {
        out.reason = "integral";
    } else if (sgn(t.k) != 0) {
        out.reason = "fpdim(X) irrational: k > 0 couples X and Y";
    } else if (!is_square(t.m * t.m + 4)) {
        out.reason = "fpdim(X) irrational: m^2+4 = " + Int(t.m * t.m + 4).get_str() +
                     " is not a square";
    } else {
        out.reason = "fpdim(Y) irrational: n^2+8 = " + Int(t.n * t.n + 8).get_str() +
                     " is not a square";
    }
    return out;
}

}
