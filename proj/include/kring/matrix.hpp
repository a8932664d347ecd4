#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kring/error.hpp"
#include "kring/numeric.hpp"
#include "kring/poly.hpp"

namespace kring {

/// Scale a rational vector to a primitive integer vector (first nonzero
/// entry positive). The zero vector is returned unchanged.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& x : v) den = int_lcm(den, x.get_den());
    std::vector<Int> w(v.size());
    Int g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (den / v[i].get_den());
        g = int_gcd(g, w[i]);
    }
    if (g == 0) return w;
    int s = 0;
    for (const auto& x : w)
        if (sgn(x) != 0) { s = sgn(x); break; }
    if (s < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

/// Dense matrix with exact rational entries.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw InvalidInput("matrix product shape mismatch");
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Rat& x = at(i, k);
                if (sgn(x) == 0) continue;
                for (int j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix sum shape mismatch");
        Mat m(*this);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }

    Mat operator*(const Rat& s) const {
        Mat m(*this);
        for (auto& x : m.a_) x *= s;
        return m;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<int>(v.size()) != c_) throw InvalidInput("matrix apply shape mismatch");
        std::vector<Rat> out(r_, Rat(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (sgn(at(i, j)) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    Rat trace() const {
        if (r_ != c_) throw InvalidInput("trace of non-square matrix");
        Rat t(0);
        for (int i = 0; i < r_; ++i) t += at(i, i);
        return t;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int p = -1;
            for (int i = row; i < r_; ++i)
                if (sgn(at(i, col)) != 0) { p = i; break; }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < c_; ++j) std::swap(at(p, j), at(row, j));
            Rat inv = Rat(1) / at(row, col);
            for (int j = col; j < c_; ++j) at(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || sgn(at(i, col)) == 0) continue;
                Rat f = at(i, col);
                for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Mat m(*this);
        return static_cast<int>(m.rref().size());
    }

    /// Kernel basis as primitive integer vectors, one per free column,
    /// ordered by free column index.
    std::vector<std::vector<Int>> kernel_basis() const {
        Mat m(*this);
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Int>> out;
        for (int free = 0; free < c_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rat> v(c_, Rat(0));
            v[free] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
            out.push_back(primitive_integer_vector(v));
        }
        return out;
    }

    /// One solution of A x = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        if (static_cast<int>(b.size()) != r_) throw InvalidInput("solve shape mismatch");
        Mat aug(r_, c_ + 1);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, c_) = b[i];
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
        std::vector<Rat> x(c_, Rat(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), c_);
        return x;
    }

    std::optional<Mat> inverse() const {
        if (r_ != c_) throw InvalidInput("inverse of non-square matrix");
        Mat aug(r_, 2 * c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, c_ + i) = 1;
        }
        std::vector<int> pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != r_ || pivots[r_ - 1] != r_ - 1) return std::nullopt;
        Mat inv(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
        return inv;
    }

private:
    int r_, c_;
    std::vector<Rat> a_;
};

/// Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier scheme.
inline Poly char_poly(const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidInput("char_poly: matrix not square");
    int n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    Mat mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat adj = mk;
            for (int i = 0; i < n; ++i) adj.at(i, i) += c[n - k + 1];
            mk = m * adj;
        }
        c[n - k] = -mk.trace() / Rat(k);
    }
    return Poly(std::move(c));
}

struct RankKernel {
    int rank;
    std::vector<std::vector<Int>> kernel;
};

inline RankKernel rank_and_kernel(const Mat& m) {
    return RankKernel{m.rank(), m.kernel_basis()};
}

/// Dense matrix with exact integer entries.
class IMat {
public:
    IMat() : r_(0), c_(0) {}
    IMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const IMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IMat& o) const { return !(*this == o); }

    IMat operator*(const IMat& o) const {
        if (c_ != o.r_) throw InvalidInput("matrix product shape mismatch");
        IMat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Int& x = at(i, k);
                if (sgn(x) == 0) continue;
                for (int j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
            }
        return m;
    }

    IMat operator+(const IMat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix sum shape mismatch");
        IMat m(*this);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }

    IMat operator-(const IMat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("matrix difference shape mismatch");
        IMat m(*this);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != c_) throw InvalidInput("matrix apply shape mismatch");
        std::vector<Int> out(r_, Int(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (sgn(at(i, j)) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    Mat to_rational() const {
        Mat m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = Rat(at(i, j));
        return m;
    }

    /// Fraction-free determinant (Bareiss).
    Int det() const {
        if (r_ != c_) throw InvalidInput("det of non-square matrix");
        int n = r_;
        if (n == 0) return Int(1);
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
        Int denom(1);
        int swaps = 0;
        for (int k = 0; k < n - 1; ++k) {
            if (sgn(a[k][k]) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (sgn(a[i][k]) != 0) { p = i; break; }
                if (p < 0) return Int(0);
                std::swap(a[k], a[p]);
                ++swaps;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                    a[i][j] = num / denom;
                }
            denom = a[k][k];
        }
        Int d = a[n - 1][n - 1];
        return (swaps % 2) ? Int(-d) : d;
    }

private:
    int r_, c_;
    std::vector<Int> a_;
};

inline IMat imat_pow(const IMat& m, long e) {
    if (m.rows() != m.cols()) throw InvalidInput("imat_pow: matrix not square");
    IMat acc = IMat::identity(m.rows());
    IMat base = m;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}
