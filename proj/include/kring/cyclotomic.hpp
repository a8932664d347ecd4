#pragma once

#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/matrix.hpp"
#include "kring/numeric.hpp"
#include "kring/poly.hpp"

namespace kring {

/// Element of the real cyclotomic field Q(z + z^-1), z a primitive p-th
/// root of unity, written over the basis b_i = z^i + z^-i (i = 1..(p-1)/2)
/// with a separate rational multiple of 1. Exponents are always kept
/// reduced to 1..(p-1)/2; z^0 + z^0 contributes 2 to the constant term.
/// Since 1 = -sum_i b_i, equality is decided on the flattened coordinates
/// a_i - c (coefficient of b_i minus the constant).
class CycloReal {
public:
    explicit CycloReal(long p) : p_(p), constant_(0), c_(check_half(p), Rat(0)) {}

    static CycloReal constant(long p, const Rat& v) {
        CycloReal x(p);
        x.constant_ = v;
        return x;
    }

    static CycloReal one(long p) { return constant(p, Rat(1)); }

    /// b_i = z^i + z^-i for any integer exponent i not divisible by p.
    static CycloReal basis(long p, long i) {
        if (i % p == 0) throw InvalidInput("CycloReal::basis: exponent divisible by p");
        CycloReal x(p);
        x.add_exponent(i, Rat(1));
        return x;
    }

    long p() const { return p_; }
    long half() const { return (p_ - 1) / 2; }
    const Rat& constant_part() const { return constant_; }

    /// Coefficient of b_i, 1 <= i <= (p-1)/2.
    const Rat& coeff(long i) const {
        if (i < 1 || i > half()) throw InvalidInput("CycloReal::coeff: index out of range");
        return c_[i - 1];
    }

    /// Add coeff * (z^e + z^-e), reducing the exponent.
    void add_exponent(long e, const Rat& v) {
        long r = ((e % p_) + p_) % p_;
        if (r == 0) {
            constant_ += 2 * v;
            return;
        }
        if (r > half()) r = p_ - r;
        c_[r - 1] += v;
    }

    void add_constant(const Rat& v) { constant_ += v; }

    CycloReal operator+(const CycloReal& o) const {
        check_same(o);
        CycloReal x(*this);
        x.constant_ += o.constant_;
        for (size_t i = 0; i < c_.size(); ++i) x.c_[i] += o.c_[i];
        return x;
    }

    CycloReal operator-(const CycloReal& o) const {
        check_same(o);
        CycloReal x(*this);
        x.constant_ -= o.constant_;
        for (size_t i = 0; i < c_.size(); ++i) x.c_[i] -= o.c_[i];
        return x;
    }

    CycloReal operator-() const {
        CycloReal x(*this);
        x.constant_ = -x.constant_;
        for (auto& v : x.c_) v = -v;
        return x;
    }

    CycloReal operator*(const Rat& s) const {
        CycloReal x(*this);
        x.constant_ *= s;
        for (auto& v : x.c_) v *= s;
        return x;
    }

    /// Product via b_i b_j = b_(i+j) + b_(i-j).
    CycloReal operator*(const CycloReal& o) const {
        check_same(o);
        CycloReal x(p_);
        x.constant_ = constant_ * o.constant_;
        for (long i = 1; i <= half(); ++i) {
            if (sgn(c_[i - 1]) == 0) continue;
            x.c_[i - 1] += c_[i - 1] * o.constant_;
        }
        for (long j = 1; j <= half(); ++j) {
            if (sgn(o.c_[j - 1]) == 0) continue;
            x.c_[j - 1] += constant_ * o.c_[j - 1];
        }
        for (long i = 1; i <= half(); ++i) {
            if (sgn(c_[i - 1]) == 0) continue;
            for (long j = 1; j <= half(); ++j) {
                if (sgn(o.c_[j - 1]) == 0) continue;
                Rat v = c_[i - 1] * o.c_[j - 1];
                x.add_exponent(i + j, v);
                x.add_exponent(i - j, v);
            }
        }
        return x;
    }

    /// Image under the field automorphism z -> z^g (gcd(g, p) = 1).
    CycloReal galois_twist(long g) const {
        long r = ((g % p_) + p_) % p_;
        if (r == 0) throw InvalidInput("galois_twist: exponent divisible by p");
        CycloReal x(p_);
        x.constant_ = constant_;
        for (long i = 1; i <= half(); ++i)
            if (sgn(c_[i - 1]) != 0) x.add_exponent(r * i, c_[i - 1]);
        return x;
    }

    /// Coordinates over the basis b_1, ..., b_(p-1)/2 alone (constant
    /// distributed via 1 = -sum b_i).
    std::vector<Rat> flat() const {
        std::vector<Rat> out(c_);
        for (auto& v : out) v -= constant_;
        return out;
    }

    bool is_zero() const {
        for (const auto& v : flat())
            if (sgn(v) != 0) return false;
        return true;
    }

    bool operator==(const CycloReal& o) const {
        if (p_ != o.p_) return false;
        return (*this - o).is_zero();
    }
    bool operator!=(const CycloReal& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        auto term = [&](const Rat& v, const std::string& sym) {
            if (sgn(v) == 0) return;
            Rat mag = abs(v);
            if (s.empty())
                s += (sgn(v) < 0) ? "-" : "";
            else
                s += (sgn(v) < 0) ? " - " : " + ";
            if (mag != 1 || sym.empty()) s += mag.get_str();
            if (!sym.empty()) {
                if (mag != 1) s += "*";
                s += sym;
            }
        };
        term(constant_, "");
        for (long i = 1; i <= half(); ++i)
            term(c_[i - 1], "(z^" + std::to_string(i) + "+z^-" + std::to_string(i) + ")");
        return s.empty() ? "0" : s;
    }

private:
    long p_;
    Rat constant_;
    std::vector<Rat> c_;

    static long check_half(long p) {
        if (p < 5 || !is_prime(p)) throw InvalidInput("CycloReal: p must be a prime >= 5");
        return (p - 1) / 2;
    }

    void check_same(const CycloReal& o) const {
        if (p_ != o.p_) throw InvalidInput("CycloReal: mixed cyclotomic levels");
    }
};

inline CycloReal squaring_endomorphism(const CycloReal& x) { return x.galois_twist(2); }

/// Image of the odd simple L_t (t odd): 1 + sum_{l=1}^{(t-1)/2} b_{2l}.
inline CycloReal embed_plus_basis(long p, long t) {
    if (t < 1 || t > p - 2 || t % 2 == 0)
        throw InvalidInput("embed_plus_basis: index must be odd in 1..p-2");
    CycloReal x = CycloReal::one(p);
    for (long l = 1; l <= (t - 1) / 2; ++l) x.add_exponent(2 * l, Rat(1));
    return x;
}

/// Linear extension over a coefficient vector in the odd-index subring
/// basis (L_1, L_3, ..., L_{p-2}).
inline CycloReal embed_plus(long p, const Vec& plus_coeffs) {
    if (static_cast<long>(plus_coeffs.size()) != (p - 1) / 2)
        throw InvalidInput("embed_plus: coefficient vector length mismatch");
    CycloReal x(p);
    for (long a = 0; a < (p - 1) / 2; ++a) {
        if (sgn(plus_coeffs[a]) == 0) continue;
        x = x + embed_plus_basis(p, 2 * a + 1) * Rat(plus_coeffs[a]);
    }
    return x;
}

/// As embed_plus, but from a full-ring vector required to have odd support.
inline CycloReal embed_plus_full_vec(long p, const Vec& full_coeffs) {
    if (static_cast<long>(full_coeffs.size()) != p - 1)
        throw InvalidInput("embed_plus_full_vec: coefficient vector length mismatch");
    Vec plus((p - 1) / 2);
    for (long t = 1; t <= p - 1; ++t) {
        if (t % 2 == 0) {
            if (sgn(full_coeffs[t - 1]) != 0)
                throw InvalidInput("embed_plus_full_vec: even-index support at L" + std::to_string(t));
        } else {
            plus[(t - 1) / 2] = full_coeffs[t - 1];
        }
    }
    return embed_plus(p, plus);
}

/// Pair of real cyclotomic numbers carrying the two-graded splitting of the
/// full Verlinde ring: odd simples land in the first slot, even simples in
/// the second. Addition is componentwise; multiplication follows the
/// grading, (a, b)(c, d) = (ac + bd, ad + bc).
struct CycloPair {
    CycloReal first, second;

    CycloPair(CycloReal f, CycloReal s) : first(std::move(f)), second(std::move(s)) {
        if (first.p() != second.p()) throw InvalidInput("CycloPair: mixed cyclotomic levels");
    }

    static CycloPair zero(long p) { return CycloPair(CycloReal(p), CycloReal(p)); }

    CycloPair operator+(const CycloPair& o) const {
        return CycloPair(first + o.first, second + o.second);
    }
    CycloPair operator-(const CycloPair& o) const {
        return CycloPair(first - o.first, second - o.second);
    }
    CycloPair operator*(const Rat& s) const { return CycloPair(first * s, second * s); }
    CycloPair operator*(const CycloPair& o) const {
        return CycloPair(first * o.first + second * o.second,
                         first * o.second + second * o.first);
    }
    bool operator==(const CycloPair& o) const {
        return first == o.first && second == o.second;
    }
    bool operator!=(const CycloPair& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + first.to_string() + ", " + second.to_string() + ")";
    }
};

/// Image of any simple L_t of the full Verlinde ring:
///   L_{2j+1} -> (1 + sum_{l<=j} b_{2l}, 0)
///   L_{2j}   -> (0, sum_{l<=j} b_{2l-1})
inline CycloPair embed_full_basis(long p, long t) {
    if (t < 1 || t > p - 1) throw InvalidInput("embed_full_basis: index out of range");
    if (t % 2 == 1) return CycloPair(embed_plus_basis(p, t), CycloReal(p));
    CycloReal s(p);
    for (long l = 1; l <= t / 2; ++l) s.add_exponent(2 * l - 1, Rat(1));
    return CycloPair(CycloReal(p), s);
}

inline CycloPair embed_full(long p, const Vec& full_coeffs) {
    if (static_cast<long>(full_coeffs.size()) != p - 1)
        throw InvalidInput("embed_full: coefficient vector length mismatch");
    CycloPair x = CycloPair::zero(p);
    for (long t = 1; t <= p - 1; ++t)
        if (sgn(full_coeffs[t - 1]) != 0)
            x = x + embed_full_basis(p, t) * Rat(full_coeffs[t - 1]);
    return x;
}

/// Minimal polynomial over Q (monic), from the first linear dependence
/// among the powers of x in flat coordinates.
inline Poly min_poly_of_cyclo(const CycloReal& x) {
    long h = x.half();
    std::vector<std::vector<Rat>> flats;
    CycloReal power = CycloReal::one(x.p());
    flats.push_back(power.flat());
    for (long d = 1; d <= h; ++d) {
        power = power * x;
        flats.push_back(power.flat());
    }
    for (long d = 1; d <= h; ++d) {
        Mat m(static_cast<int>(h), static_cast<int>(d));
        for (long col = 0; col < d; ++col)
            for (long row = 0; row < h; ++row)
                m.at(static_cast<int>(row), static_cast<int>(col)) = flats[col][row];
        auto sol = m.solve(flats[d]);
        if (sol) {
            std::vector<Rat> coeffs(d + 1);
            for (long i = 0; i < d; ++i) coeffs[i] = -(*sol)[i];
            coeffs[d] = 1;
            return Poly(std::move(coeffs));
        }
    }
    throw InternalCheckFailure("min_poly_of_cyclo: no dependence up to field degree");
}

/// Evaluate a rational polynomial at a real cyclotomic argument.
inline CycloReal eval_poly_at_cyclo(const Poly& f, const CycloReal& x) {
    CycloReal acc(x.p());
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * x;
        acc.add_constant(f.coeff(k));
    }
    return acc;
}

}
