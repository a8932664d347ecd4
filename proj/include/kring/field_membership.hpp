#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kring/cyclotomic.hpp"
#include "kring/error.hpp"
#include "kring/factor.hpp"
#include "kring/galois.hpp"
#include "kring/numeric.hpp"
#include "kring/poly.hpp"

namespace kring {

/// Arithmetic in Q[t]/(chi) for monic irreducible chi; elements are
/// polynomials of degree < deg chi.
class NumberField {
public:
    explicit NumberField(Poly chi) : chi_(std::move(chi)) {
        if (chi_.degree() < 1 || chi_.leading() != 1)
            throw InvalidInput("NumberField: modulus must be monic of positive degree");
    }

    const Poly& modulus() const { return chi_; }
    int degree() const { return chi_.degree(); }

    Poly reduce(const Poly& u) const { return u.divmod(chi_).second; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

    /// Inverse of a nonzero element, by the extended Euclidean algorithm;
    /// exists because chi is irreducible.
    Poly inverse(const Poly& a) const {
        Poly r0 = chi_, r1 = reduce(a);
        if (r1.is_zero()) throw InvalidInput("NumberField::inverse: zero element");
        Poly s0 = Poly::zero(), s1 = Poly::constant(Rat(1));
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divmod(r1);
            Poly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0)
            throw InternalCheckFailure("NumberField::inverse: modulus not coprime to element");
        return reduce(s0 * Poly::constant(Rat(1) / r0.coeff(0)));
    }

private:
    Poly chi_;
};

/// Polynomial in u with coefficients in Q[t]/(chi); ascending, reduced.
using NFPoly = std::vector<Poly>;

namespace detail {

inline void nf_strip(NFPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int nf_degree(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }

inline NFPoly nf_from_rational(const Poly& f) {
    NFPoly out;
    for (int i = 0; i <= f.degree(); ++i) out.push_back(Poly::constant(f.coeff(i)));
    nf_strip(out);
    return out;
}

/// f(u + shift) where shift lies in the field; Horner in u.
inline NFPoly nf_compose_shift(const NumberField& nf, const Poly& f, const Poly& shift) {
    NFPoly acc;
    for (int k = f.degree(); k >= 0; --k) {
        // acc <- acc * (u + shift) + f_k
        NFPoly next(acc.size() + 1, Poly::zero());
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = next[i + 1] + acc[i];
            next[i] = next[i] + nf.mul(acc[i], shift);
        }
        if (next.empty()) next.push_back(Poly::zero());
        next[0] = next[0] + Poly::constant(f.coeff(k));
        nf_strip(next);
        acc = std::move(next);
    }
    return acc;
}

inline NFPoly nf_mod(const NumberField& nf, NFPoly a, const NFPoly& b) {
    nf_strip(a);
    if (b.empty()) throw InvalidInput("nf_mod: division by zero");
    Poly lead_inv = nf.inverse(b.back());
    while (nf_degree(a) >= nf_degree(b)) {
        Poly q = nf.mul(a.back(), lead_inv);
        int off = nf_degree(a) - nf_degree(b);
        for (int i = 0; i <= nf_degree(b); ++i)
            a[i + off] = nf.reduce(a[i + off] - nf.mul(q, b[i]));
        nf_strip(a);
    }
    return a;
}

/// Monic gcd over the number field.
inline NFPoly nf_gcd(const NumberField& nf, NFPoly a, NFPoly b) {
    nf_strip(a);
    nf_strip(b);
    while (!b.empty()) {
        NFPoly r = nf_mod(nf, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Poly lead_inv = nf.inverse(a.back());
        for (auto& c : a) c = nf.mul(c, lead_inv);
    }
    return a;
}

/// Res_t(chi(t), f(u - s t)) as a polynomial in u, by evaluation at
/// deg(chi) * deg(f) + 1 integer points and interpolation.
inline Poly norm_resultant(const Poly& chi, const Poly& f, long s) {
    int bound = chi.degree() * f.degree();
    std::vector<std::pair<Rat, Rat>> samples;
    for (long u0 = 0; static_cast<int>(samples.size()) <= bound; ++u0) {
        // f(u0 - s t) as a polynomial in t
        Poly line({Rat(u0), Rat(-s)});
        Poly ft = f.compose(line);
        samples.emplace_back(Rat(u0), resultant(chi, ft));
    }
    return lagrange_interpolate(samples);
}

}

/// Roots of the irreducible rational polynomial f inside Q[t]/(chi), found
/// by the norm method: pick a shift s with squarefree norm
/// N(u) = Res_t(chi, f(u - s t)), factor N over Q, and read linear factors
/// of f over the field off gcds with the shifted rational factors.
inline std::vector<Poly> roots_in_number_field(const Poly& f, const Poly& chi,
                                               int factor_cap = 16) {
    NumberField nf(chi);
    if (f.degree() == 1) return {Poly::constant(-f.coeff(0) / f.coeff(1))};
    for (long s = 1; s <= 40; ++s) {
        Poly norm = detail::norm_resultant(chi, f, s);
        if (norm.degree() != chi.degree() * f.degree()) continue;
        if (poly_gcd(norm, norm.derivative()).degree() != 0) continue;
        FactorResult fac = factor_rational_poly(norm, factor_cap);
        std::vector<Poly> roots;
        Poly shift({Rat(0), Rat(s)});  // s * t as a field element
        for (const auto& [factor, mult] : fac.factors) {
            NFPoly g = detail::nf_gcd(nf, detail::nf_from_rational(f),
                                      detail::nf_compose_shift(nf, factor, shift));
            if (detail::nf_degree(g) == 1) roots.push_back(nf.reduce(-g[0]));
        }
        return roots;
    }
    throw Unsupported("roots_in_number_field: no squarefree shift found");
}

struct FieldMembership {
    bool has_root = false;
    long p = 0;
    Poly factor_with_root;              // irreducible factor that acquired a root
    std::optional<CycloReal> witness;   // exact root, verified by evaluation
};

/// Does P have a root in the real cyclotomic field of conductor p?
/// Supported for deg P <= 4. Each irreducible factor f of P can only have
/// a root if deg f divides (p-1)/2; in that case the root, if any, lies in
/// the unique subfield of degree deg f, generated by an orbit sum x1 whose
/// minimal polynomial chi is computed exactly. Any root found is mapped
/// back through x1 and re-verified by exact evaluation.
inline FieldMembership has_root_in_real_cyclotomic(const Poly& input, long p,
                                                   int degree_cap = 4) {
    require_verlinde_prime(p);
    if (input.is_zero() || input.degree() < 1)
        throw InvalidInput("has_root_in_real_cyclotomic: polynomial must be nonconstant");
    if (input.degree() > degree_cap)
        throw Unsupported("has_root_in_real_cyclotomic: degree " +
                          std::to_string(input.degree()) + " exceeds cap " +
                          std::to_string(degree_cap));
    FieldMembership out;
    out.p = p;
    long half = (p - 1) / 2;
    FactorResult fac = factor_rational_poly(input);
    for (const auto& [f, mult] : fac.factors) {
        long d = f.degree();
        if (d == 1) {
            out.has_root = true;
            out.factor_with_root = f;
            out.witness = CycloReal::constant(p, -f.coeff(0) / f.coeff(1));
            return out;
        }
        if (half % d != 0) continue;
        GaloisOrbitData data = galois_orbits(p, half / d);
        CycloReal x1 = data.orbit_sum(0);
        Poly chi = min_poly_of_cyclo(x1);
        if (chi.degree() != d)
            throw InternalCheckFailure("has_root_in_real_cyclotomic: subfield generator degenerate");
        std::vector<Poly> roots = roots_in_number_field(f.monic(), chi);
        if (roots.empty()) continue;
        CycloReal witness = eval_poly_at_cyclo(roots.front(), x1);
        if (!eval_poly_at_cyclo(f, witness).is_zero())
            throw InternalCheckFailure("has_root_in_real_cyclotomic: witness failed re-verification");
        out.has_root = true;
        out.factor_with_root = f;
        out.witness = witness;
        return out;
    }
    return out;
}

}
