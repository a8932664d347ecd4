#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/factor.hpp"
#include "kring/roots.hpp"

namespace kring {

struct FPDim {
    RootInterval interval;
    std::optional<Int> exact;
    Poly char_poly;
};

/// Frobenius-Perron dimension of basis element i: the spectral radius of
/// its multiplication matrix, certified by an isolating interval; exact
/// integer value when rational.
inline FPDim fpdim(const BasedRing& r, int i) {
    if (i < 0 || i >= r.rank()) throw InvalidInput("fpdim: basis index out of range");
    PerronRoot pr = perron_root(r.fusion_matrix(i));
    RootInterval iv = pr.interval;
    if (!iv.is_exact()) iv.refine_to(Rat(1, 16));
    if (iv.hi() < 1)
        throw InternalCheckFailure("fpdim: spectral radius below 1 for basis element " + r.label(i));
    return FPDim{iv, pr.exact, pr.char_poly};
}

struct TotalDim {
    Rat lo, hi;
    std::optional<Rat> exact;
};

/// Sum of squared FP dimensions, as an interval of width at most tol
/// (exact when every summand is exact).
inline TotalDim fpdim_total(const BasedRing& r, const Rat& tol = Rat(1, 1000)) {
    std::vector<FPDim> dims;
    dims.reserve(r.rank());
    for (int i = 0; i < r.rank(); ++i) dims.push_back(fpdim(r, i));
    bool exact = true;
    for (const auto& d : dims) exact = exact && d.exact.has_value();
    TotalDim out{Rat(0), Rat(0), std::nullopt};
    if (exact) {
        Rat total(0);
        for (const auto& d : dims) total += Rat(*d.exact) * Rat(*d.exact);
        out.lo = out.hi = total;
        out.exact = total;
        return out;
    }
    Rat target = tol / Rat(2 * r.rank());
    for (auto& d : dims) {
        // width of d^2 over [lo, hi] is (hi - lo)(hi + lo); shrink until within target
        while (!d.interval.is_exact() &&
               d.interval.width() * (d.interval.hi() + d.interval.lo()) > target)
            d.interval.refine_to(d.interval.width() / 2);
        out.lo += d.interval.lo() * d.interval.lo();
        out.hi += d.interval.hi() * d.interval.hi();
    }
    return out;
}

/// All basis elements have integer FP dimension.
inline bool is_integral(const BasedRing& r) {
    for (int i = 0; i < r.rank(); ++i)
        if (!fpdim(r, i).exact.has_value()) return false;
    return true;
}

/// Sum of squared FP dimensions modulo a prime; defined for integral rings
/// only (where a positive-characteristic global dimension makes sense).
inline long global_dim_mod_p(const BasedRing& r, long p) {
    if (p < 2) throw InvalidInput("global_dim_mod_p: modulus must be >= 2");
    Int total(0);
    for (int i = 0; i < r.rank(); ++i) {
        FPDim d = fpdim(r, i);
        if (!d.exact)
            throw Unsupported("global_dim_mod_p: ring is not integral");
        total += (*d.exact) * (*d.exact);
    }
    Int m = total % p;
    if (sgn(m) < 0) m += p;
    return m.get_si();
}

namespace detail {

/// The unique irreducible factor of chi with a root inside the isolating
/// interval, found by refining until exactly one factor reports a root.
inline Poly irreducible_factor_containing(const Poly& chi, RootInterval interval,
                                          int factor_cap = 12) {
    FactorResult fac = factor_rational_poly(chi, factor_cap);
    for (int pass = 0; pass < 128; ++pass) {
        std::vector<const Poly*> hits;
        for (const auto& [f, mult] : fac.factors) {
            if (interval.is_exact()) {
                if (sgn(f.eval(interval.lo())) == 0) hits.push_back(&f);
                continue;
            }
            SturmChain chain(squarefree_part(f));
            int count = chain.count_in(interval.lo(), interval.hi());
            if (sgn(f.eval(interval.lo())) == 0) ++count;  // count_in is half-open
            if (count > 0) hits.push_back(&f);
        }
        if (hits.size() == 1) return hits.front()->monic();
        if (hits.empty())
            throw InternalCheckFailure("irreducible_factor_containing: lost the root");
        interval.refine_to(interval.width() / 4);
    }
    throw InternalCheckFailure("irreducible_factor_containing: factors failed to separate");
}

}

/// Minimal polynomial (monic) of the FP dimension of basis element i: the
/// irreducible factor of the fusion-matrix characteristic polynomial whose
/// root is the spectral radius.
inline Poly fpdim_min_poly(const BasedRing& r, int i) {
    FPDim d = fpdim(r, i);
    if (d.exact) return Poly({Rat(-*d.exact), Rat(1)});
    return detail::irreducible_factor_containing(d.char_poly, d.interval);
}

/// Multiplication matrix of sum_i b_i* b_i; its spectral radius is the
/// total FP dimension sum_i fpdim(b_i)^2.
inline IMat total_fpdim_matrix(const BasedRing& r) {
    IMat s(r.rank(), r.rank());
    for (int i = 0; i < r.rank(); ++i)
        s = s + r.fusion_matrix(r.dual(i)) * r.fusion_matrix(i);
    return s;
}

struct TotalDimExact {
    PerronRoot perron;
    Poly min_poly;
};

/// Total FP dimension as a certified Perron root with its exact minimal
/// polynomial; cross-checkable against the interval sum of fpdim_total.
inline TotalDimExact total_fpdim_perron(const BasedRing& r) {
    PerronRoot pr = perron_root(total_fpdim_matrix(r));
    Poly mu = pr.exact ? Poly({Rat(-*pr.exact), Rat(1)})
                       : detail::irreducible_factor_containing(pr.char_poly, pr.interval);
    return TotalDimExact{std::move(pr), std::move(mu)};
}

namespace detail {

/// Minimal polynomial of the element with coefficient vector a, computed
/// from the first linear dependence among its powers.
inline Poly min_poly_of_element(const BasedRing& r, const Vec& a) {
    int n = r.rank();
    std::vector<Vec> powers;
    powers.push_back(r.basis_vector(r.unit()));
    for (int d = 1; d <= n; ++d) powers.push_back(r.multiply(powers.back(), a));
    for (int d = 1; d <= n; ++d) {
        // solve powers[d] = sum_{i<d} c_i powers[i]
        Mat m(n, d);
        for (int col = 0; col < d; ++col)
            for (int row = 0; row < n; ++row) m.at(row, col) = Rat(powers[col][row]);
        std::vector<Rat> b(n);
        for (int row = 0; row < n; ++row) b[row] = Rat(powers[d][row]);
        auto sol = m.solve(b);
        if (sol) {
            std::vector<Rat> coeffs(d + 1);
            for (int i = 0; i < d; ++i) coeffs[i] = -(*sol)[i];
            coeffs[d] = 1;
            return Poly(std::move(coeffs));
        }
    }
    throw InternalCheckFailure("min_poly_of_element: no dependence up to full rank");
}

}

/// Multiset of field degrees in the Artin-Wedderburn decomposition of the
/// rationalized ring, computed from the factor degrees of the minimal
/// polynomial of a separating element (minimal polynomial degree = rank).
/// The separating element is drawn from a fixed deterministic pool: basis
/// elements first, then geometric tuples (1, t, t^2, ...) for t = 2..9.
/// Rings of rank above 12 are refused (factorization degree cap).
inline std::vector<int> decomposition_type(const BasedRing& r) {
    int n = r.rank();
    if (n > 12) throw Unsupported("decomposition_type: rank above factorization cap 12");
    std::vector<Vec> pool;
    for (int i = 0; i < n; ++i) pool.push_back(r.basis_vector(i));
    for (long t = 2; t <= 9; ++t) {
        Vec v(n);
        Int power(1);
        for (int i = 0; i < n; ++i) {
            v[i] = power;
            power *= t;
        }
        pool.push_back(v);
    }
    for (const Vec& a : pool) {
        Poly mp = detail::min_poly_of_element(r, a);
        if (mp.degree() != n) continue;
        FactorResult f = factor_rational_poly(mp);
        std::vector<int> degrees;
        int total = 0;
        for (const auto& [fac, mult] : f.factors) {
            if (mult != 1)
                throw InternalCheckFailure("decomposition_type: repeated factor in minimal polynomial");
            degrees.push_back(fac.degree());
            total += fac.degree();
        }
        if (total != n)
            throw InternalCheckFailure("decomposition_type: factor degrees do not sum to rank");
        std::sort(degrees.begin(), degrees.end());
        return degrees;
    }
    throw Unsupported("decomposition_type: separating-element pool exhausted");
}

}
