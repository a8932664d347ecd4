#pragma once

#include <optional>
#include <vector>

#include "kring/error.hpp"
#include "kring/matrix.hpp"
#include "kring/numeric.hpp"
#include "kring/poly.hpp"

namespace kring {

/// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const Poly& q) {
        seq_.push_back(q);
        if (q.degree() >= 1) {
            seq_.push_back(q.derivative());
            while (true) {
                const Poly& a = seq_[seq_.size() - 2];
                const Poly& b = seq_.back();
                if (b.is_zero()) break;
                Poly r = a.divmod(b).second;
                if (r.is_zero()) break;
                seq_.push_back(-r);
            }
        }
    }

    int variations_at(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = sign(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    /// Number of roots in the half-open interval (a, b].
    int count_in(const Rat& a, const Rat& b) const {
        return variations_at(a) - variations_at(b);
    }

private:
    std::vector<Poly> seq_;
};

/// Isolating interval [lo, hi] for a single simple real root of `poly`
/// (squarefree, primitive integer). Either lo == hi and the root is the
/// rational value lo, or lo < hi with a sign change across the interval.
class RootInterval {
public:
    RootInterval(Poly poly, Rat lo, Rat hi)
        : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw InvalidInput("RootInterval: lo > hi");
        if (lo_ == hi_) {
            if (sign(poly_.eval(lo_)) != 0)
                throw InternalCheckFailure("RootInterval: degenerate endpoint is not a root");
        } else if (sign(poly_.eval(lo_)) * sign(poly_.eval(hi_)) >= 0) {
            throw InternalCheckFailure("RootInterval: no sign change across interval");
        }
    }

    const Poly& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    bool is_exact() const { return lo_ == hi_; }
    const Rat& exact_value() const {
        if (!is_exact()) throw InvalidInput("RootInterval: interval not degenerate");
        return lo_;
    }

    /// Shrink by bisection until the width is at most `w`.
    void refine_to(const Rat& w) {
        while (!is_exact() && width() > w) {
            Rat m = (lo_ + hi_) / 2;
            int sm = sign(poly_.eval(m));
            if (sm == 0) {
                lo_ = m;
                hi_ = m;
                return;
            }
            if (sm == sign(poly_.eval(lo_)))
                lo_ = m;
            else
                hi_ = m;
        }
    }

    bool entirely_below(const Rat& x) const { return hi_ < x; }
    bool entirely_above(const Rat& x) const { return lo_ > x; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }

private:
    Poly poly_;
    Rat lo_, hi_;
};

/// Cauchy bound: every real root of p lies strictly inside (-B, B).
inline Rat cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("cauchy_root_bound of zero polynomial");
    Rat m(0);
    Rat lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rat v = abs(p.coeff(k)) / lead;
        if (v > m) m = v;
    }
    return m + 1;
}

/// Isolating intervals for all distinct real roots of p, in increasing
/// order of the roots. Multiplicities are discarded.
inline std::vector<RootInterval> isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("isolate_real_roots of zero polynomial");
    if (p.degree() == 0) return {};
    Poly q = squarefree_part(p).primitive_integer();
    if (q.degree() == 0) return {};
    SturmChain chain(q);
    Rat b = cauchy_root_bound(q);
    std::vector<RootInterval> out;

    struct Seg {
        Rat a, b;
        int va, vb;
    };
    // Recursive bisection of (a, b]; endpoints are kept off the root set.
    auto emit = [&](const Rat& a, const Rat& bb) { out.emplace_back(q, a, bb); };
    std::vector<Seg> stack;
    int va = chain.variations_at(-b), vb = chain.variations_at(b);
    if (va - vb > 0) stack.push_back({-b, b, va, vb});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int count = s.va - s.vb;
        if (count <= 0) continue;
        if (count == 1) {
            emit(s.a, s.b);
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        if (sign(q.eval(m)) == 0) {
            Rat eps = (s.b - s.a) / 4;
            while (true) {
                Rat ml = m - eps, mr = m + eps;
                if (sign(q.eval(ml)) != 0 && sign(q.eval(mr)) != 0 &&
                    chain.count_in(ml, mr) == 1)
                    break;
                eps /= 2;
            }
            Rat ml = m - eps, mr = m + eps;
            int vml = chain.variations_at(ml), vmr = chain.variations_at(mr);
            out.emplace_back(q, m, m);
            stack.push_back({s.a, ml, s.va, vml});
            stack.push_back({mr, s.b, vmr, s.vb});
        } else {
            int vm = chain.variations_at(m);
            stack.push_back({s.a, m, s.va, vm});
            stack.push_back({m, s.b, vm, s.vb});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo() < y.lo(); });
    return out;
}

/// Integer roots of an integer-coefficient polynomial, ascending.
/// Intended for small constant terms; refuses oversized divisor searches.
inline std::vector<Int> integer_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("integer_roots of zero polynomial");
    Poly q = p.primitive_integer();
    std::vector<Int> out;
    int shift = 0;
    while (sgn(q.coeff(0)) == 0 && q.degree() > 0) {
        std::vector<Rat> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(std::move(c));
        shift = 1;
    }
    if (shift) out.push_back(Int(0));
    if (q.degree() >= 1) {
        Int c0 = q.coeff(0).get_num();
        Int a = abs(c0);
        if (a > 1000000000000L) throw Unsupported("integer_roots: constant term too large");
        long limit = static_cast<long>(isqrt(a).get_si());
        std::vector<Int> divs;
        for (long d = 1; d <= limit; ++d) {
            if (a % d == 0) {
                divs.emplace_back(d);
                divs.push_back(a / Int(d));
            }
        }
        for (const Int& d : divs) {
            for (int s : {1, -1}) {
                Int cand = s * d;
                if (sign(q.eval(Rat(cand))) == 0) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct PerronRoot {
    RootInterval interval;
    std::optional<Int> exact;
    Poly char_poly;
};

/// Largest real eigenvalue of a square entrywise-nonnegative integer matrix
/// (its spectral radius). Returns an isolating interval, plus the exact
/// integer value when the root is rational: a rational root of a monic
/// integer polynomial is an integer, so the rational-root test reduces to
/// checking the integers inside a width < 1 refinement.
inline PerronRoot perron_root(const IMat& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw InvalidInput("perron_root: matrix must be square and nonempty");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (sgn(m.at(i, j)) < 0) throw InvalidInput("perron_root: negative entry");
    Poly cp = char_poly(m.to_rational());
    std::vector<RootInterval> roots = isolate_real_roots(cp);
    if (roots.empty()) throw InternalCheckFailure("perron_root: no real eigenvalue found");
    RootInterval top = roots.back();
    top.refine_to(Rat(1, 4));
    std::optional<Int> exact;
    if (top.is_exact()) {
        if (top.exact_value().get_den() != 1)
            throw InternalCheckFailure("perron_root: non-integer rational root of monic poly");
        exact = top.exact_value().get_num();
    } else {
        Int lo_ceil = top.lo().get_num() / top.lo().get_den();
        for (Int k = lo_ceil - 1; k <= lo_ceil + 2; ++k) {
            if (top.contains(Rat(k)) && sign(top.poly().eval(Rat(k))) == 0) {
                exact = k;
                top = RootInterval(top.poly(), Rat(k), Rat(k));
                break;
            }
        }
    }
    return PerronRoot{top, exact, cp};
}

}
