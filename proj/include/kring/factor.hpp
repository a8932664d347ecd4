#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "kring/error.hpp"
#include "kring/numeric.hpp"
#include "kring/poly.hpp"

namespace kring {

namespace detail {

using CLD = std::complex<long double>;

inline CLD poly_eval_cld(const std::vector<CLD>& c, const CLD& x) {
    CLD acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Approximate complex roots of a squarefree polynomial (Aberth-Ehrlich
/// iteration, Newton polish). Approximations only; all downstream factor
/// decisions are verified with exact division.
inline std::vector<CLD> numeric_roots(const Poly& q) {
    int n = q.degree();
    std::vector<CLD> c(n + 1), d(n);
    long double lead = static_cast<long double>(q.leading().get_d());
    for (int k = 0; k <= n; ++k)
        c[k] = CLD(static_cast<long double>(q.coeff(k).get_d()) / lead, 0.0L);
    for (int k = 1; k <= n; ++k) d[k - 1] = c[k] * static_cast<long double>(k);

    long double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius += 1;
    std::vector<CLD> z(n);
    const long double pi = 3.14159265358979323846L;
    for (int k = 0; k < n; ++k) {
        long double ang = 2 * pi * k / n + 0.39L;
        z[k] = radius * CLD(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 600; ++iter) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            CLD pv = poly_eval_cld(c, z[k]);
            CLD dv = poly_eval_cld(d, z[k]);
            if (std::abs(dv) < 1e-300L) {
                z[k] += CLD(1e-6L, 1e-6L);
                worst = 1;
                continue;
            }
            CLD w = pv / dv;
            CLD s(0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += CLD(1.0L, 0.0L) / (z[k] - z[j]);
            CLD corr = w / (CLD(1.0L, 0.0L) - w * s);
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }
    for (int k = 0; k < n; ++k)
        for (int step = 0; step < 6; ++step) {
            CLD dv = poly_eval_cld(d, z[k]);
            if (std::abs(dv) < 1e-300L) break;
            z[k] -= poly_eval_cld(c, z[k]) / dv;
        }
    return z;
}

inline bool round_to_int(long double x, Int& out) {
    if (!(std::fabs(x) < 9.0e18L)) return false;
    long long r = std::llroundl(x);
    out = Int(static_cast<long>(r));
    return true;
}

/// Irreducible factors of a primitive squarefree integer polynomial:
/// cluster numeric roots into candidate subsets, round each candidate to an
/// integer polynomial, and keep it only when exact division succeeds.
inline std::vector<Poly> factor_squarefree_integer(Poly rem) {
    std::vector<Poly> out;
    if (rem.degree() <= 1) {
        if (rem.degree() == 1) out.push_back(rem);
        return out;
    }
    std::vector<CLD> roots = numeric_roots(rem);
    std::vector<int> active(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) active[i] = static_cast<int>(i);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        std::vector<CLD> prod{CLD(1.0L, 0.0L)};
        for (int idx : subset) {
            std::vector<CLD> next(prod.size() + 1, CLD(0));
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] -= prod[i] * roots[idx];
            }
            prod = std::move(next);
        }
        long double lead = static_cast<long double>(rem.leading().get_d());
        std::vector<Rat> cand(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) {
            Int r;
            if (!round_to_int(prod[i].real() * lead, r)) return false;
            cand[i] = Rat(r);
        }
        Poly g = Poly(std::move(cand));
        if (g.degree() != static_cast<int>(subset.size())) return false;
        g = g.primitive_integer();
        auto [q, r] = rem.divmod(g);
        if (!r.is_zero()) return false;
        out.push_back(g);
        rem = q.primitive_integer();
        return true;
    };

    for (size_t s = 1; !active.empty() && s <= active.size() / 2;) {
        bool found = false;
        std::vector<int> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            std::vector<int> subset(s);
            for (size_t i = 0; i < s; ++i) subset[i] = active[idx[i]];
            if (try_subset(subset)) {
                std::vector<int> next;
                for (size_t i = 0, j = 0; i < active.size(); ++i) {
                    if (j < s && idx[j] == static_cast<int>(i))
                        ++j;
                    else
                        next.push_back(active[i]);
                }
                active = std::move(next);
                found = true;
                break;
            }
            int pos = static_cast<int>(s) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(active.size() - s + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.degree() >= 1) out.push_back(rem);
    return out;
}

}

struct FactorResult {
    Rat unit;
    std::vector<std::pair<Poly, int>> factors;

    /// Expand unit * prod(factor^multiplicity).
    Poly expand() const {
        Poly acc = Poly::constant(unit);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) acc = acc * f;
        return acc;
    }
};

/// Factor a nonzero rational polynomial into irreducible primitive integer
/// polynomials with multiplicities, plus a rational unit. The factorization
/// is re-expanded and compared with the input before returning.
inline FactorResult factor_rational_poly(const Poly& p, int degree_cap = 12) {
    if (p.is_zero()) throw InvalidInput("factor_rational_poly: zero polynomial");
    if (p.degree() > degree_cap)
        throw Unsupported("factor_rational_poly: degree " + std::to_string(p.degree()) +
                          " above cap " + std::to_string(degree_cap));
    FactorResult res;
    res.unit = Rat(1);
    for (const auto& [sq, mult] : squarefree_decomposition(p)) {
        for (const Poly& f : detail::factor_squarefree_integer(sq.primitive_integer()))
            res.factors.push_back({f, mult});
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  for (int k = a.first.degree(); k >= 0; --k) {
                      if (a.first.coeff(k) != b.first.coeff(k))
                          return a.first.coeff(k) < b.first.coeff(k);
                  }
                  return a.second < b.second;
              });
    Poly prod = Poly::constant(Rat(1));
    for (const auto& [f, m] : res.factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    res.unit = p.leading() / prod.leading();
    if (res.expand() != p)
        throw InternalCheckFailure("factor_rational_poly: verification product mismatch");
    return res;
}

/// True when p (degree >= 1) has no factorization into smaller-degree
/// rational polynomials.
inline bool is_irreducible(const Poly& p, int degree_cap = 12) {
    if (p.degree() < 1) throw InvalidInput("is_irreducible: degree must be >= 1");
    FactorResult f = factor_rational_poly(p, degree_cap);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}
