#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kring/error.hpp"
#include "kring/numeric.hpp"

namespace kring {

/// Dense univariate polynomial with exact rational coefficients,
/// stored in ascending order with the leading coefficient nonzero.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly zero() { return Poly(); }

    static Poly constant(const Rat& v) { return Poly({v}); }

    /// Monomial c * t^k.
    static Poly monomial(const Rat& c, int k) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    static Poly from_int_coeffs(const std::vector<long>& coeffs) {
        std::vector<Rat> v;
        v.reserve(coeffs.size());
        for (long x : coeffs) v.emplace_back(x);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rat& coeff(int k) const {
        static const Rat z(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return z;
        return c_[k];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& leading() const {
        if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(v));
    }

    Poly operator*(const Rat& s) const {
        if (sgn(s) == 0) return Poly();
        Poly r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Poly(std::move(v));
    }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw InvalidInput("polynomial division by zero");
        Poly r(*this);
        std::vector<Rat> q(std::max(0, degree() - d.degree() + 1), Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat f = r.leading() / d.leading();
            int k = r.degree() - d.degree();
            q[k] = f;
            std::vector<Rat> t(r.c_);
            for (int i = 0; i <= d.degree(); ++i) t[i + k] -= f * d.c_[i];
            r = Poly(std::move(t));
        }
        return {Poly(std::move(q)), r};
    }

    /// Exact division; throws if the remainder is nonzero.
    Poly exact_divide(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw InternalCheckFailure("exact_divide: nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    bool has_integer_coeffs() const {
        for (const auto& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }

    /// Primitive integer polynomial with positive leading coefficient,
    /// equal to this one up to a positive rational factor.
    Poly primitive_integer() const {
        if (is_zero()) return *this;
        Int den(1);
        for (const auto& x : c_) den = int_lcm(den, x.get_den());
        Int g(0);
        for (const auto& x : c_) g = int_gcd(g, Int(x.get_num() * den / x.get_den()));
        Rat f = Rat(den) / Rat(g);
        if (sgn(leading()) < 0) f = -f;
        return *this * f;
    }

    /// Horner composition this(g).
    Poly compose(const Poly& g) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * g + Poly::constant(*it);
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rat& a = c_[k];
            if (sgn(a) == 0) continue;
            Rat mag = abs(a);
            if (s.empty())
                s += (sgn(a) < 0) ? "-" : "";
            else
                s += (sgn(a) < 0) ? " - " : " + ";
            bool unit_coeff = (mag == 1) && k > 0;
            if (!unit_coeff) s += mag.get_str();
            if (k > 0) {
                if (!unit_coeff) s += "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    std::vector<Rat> c_;

    void strip() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

/// Monic gcd over the rationals; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p divided by gcd(p, p'); same roots as p, each simple.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree_part of zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rat(1));
    Poly g = poly_gcd(p, p.derivative());
    return p.exact_divide(g).primitive_integer();
}

/// Yun's squarefree decomposition: list of {factor, multiplicity} with the
/// factors squarefree, pairwise coprime, and product (up to a rational unit)
/// equal to the input.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    Poly a = p.monic();
    Poly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    Poly w = a.exact_divide(g);
    Poly y = a.derivative().exact_divide(g);
    int i = 1;
    while (true) {
        Poly z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() > 0) out.push_back({w.monic(), i});
            break;
        }
        Poly f = poly_gcd(w, z);
        if (f.degree() > 0) out.push_back({f.monic(), i});
        w = w.exact_divide(f);
        y = z.exact_divide(f);
        ++i;
    }
    return out;
}

/// Resultant of two rational polynomials.
inline Rat resultant(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat acc(1);
    bool neg = false;
    while (b.degree() > 0) {
        Poly r = a.divmod(b).second;
        int da = a.degree(), db = b.degree();
        int dr = r.is_zero() ? -1 : r.degree();
        if ((da & 1) && (db & 1)) neg = !neg;
        Rat lb = b.leading();
        Int e = da - (dr < 0 ? 0 : dr);
        Rat pw(1);
        for (Int i = 0; i < e; ++i) pw *= lb;
        acc *= pw;
        if (r.is_zero()) return Rat(0);
        a = std::move(b);
        b = std::move(r);
    }
    Rat lb = b.coeff(0);
    Rat pw(1);
    for (int i = 0; i < a.degree(); ++i) pw *= lb;
    acc *= pw;
    return neg ? -acc : acc;
}

/// Unique polynomial of degree < points.size() through the given points;
/// the abscissae must be pairwise distinct.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    Poly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        Poly term = Poly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            term = term * Poly({-points[j].first, Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        if (sgn(denom) == 0) throw InvalidInput("lagrange_interpolate: repeated abscissa");
        acc = acc + term * (points[i].second / denom);
    }
    return acc;
}

}
