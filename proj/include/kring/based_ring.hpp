#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kring/error.hpp"
#include "kring/matrix.hpp"
#include "kring/numeric.hpp"

namespace kring {

/// Coefficient vector of a ring element over the distinguished basis.
using Vec = std::vector<Int>;

struct AxiomCheck {
    bool ok = true;
    std::string axiom;    // name of the first violated axiom, empty if ok
    std::string witness;  // human-readable indices/values for the violation
};

/// Finite-rank ring with a distinguished basis, nonnegative structure
/// constants, unit basis element and duality involution. Commutativity is
/// part of the axiom set checked here (the whole library works with
/// commutative examples).
class BasedRing {
public:
    BasedRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
              std::vector<int64_t> n)
        : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), n_(std::move(n)) {
        rank_ = static_cast<int>(labels_.size());
        if (rank_ <= 0) throw InvalidInput("BasedRing: rank must be positive");
        if (unit_ < 0 || unit_ >= rank_) throw InvalidInput("BasedRing: unit index out of range");
        if (static_cast<int>(dual_.size()) != rank_)
            throw InvalidInput("BasedRing: dual vector has wrong length");
        for (int d : dual_)
            if (d < 0 || d >= rank_) throw InvalidInput("BasedRing: dual index out of range");
        if (n_.size() != static_cast<size_t>(rank_) * rank_ * rank_)
            throw InvalidInput("BasedRing: structure constant tensor has wrong shape");
    }

    int rank() const { return rank_; }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& duals() const { return dual_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Structure constant N[i][j][k]: multiplicity of b_k in b_i * b_j.
    int64_t N(int i, int j, int k) const {
        return n_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }

    const std::vector<int64_t>& tensor() const { return n_; }

    bool operator==(const BasedRing& o) const {
        return labels_ == o.labels_ && unit_ == o.unit_ && dual_ == o.dual_ && n_ == o.n_;
    }

    Vec basis_vector(int i) const {
        Vec v(rank_, Int(0));
        v[i] = 1;
        return v;
    }

    Vec zero_vector() const { return Vec(rank_, Int(0)); }

    /// Multiplication-by-b_i matrix: entry (k, j) is N[i][j][k], so the
    /// matrix sends the coefficient vector of x to that of b_i * x.
    IMat fusion_matrix(int i) const {
        IMat m(rank_, rank_);
        for (int k = 0; k < rank_; ++k)
            for (int j = 0; j < rank_; ++j) m.at(k, j) = Int(N(i, j, k));
        return m;
    }

    /// Multiplication matrix of an arbitrary element.
    IMat multiplication_matrix(const Vec& x) const {
        check_vec(x);
        IMat m(rank_, rank_);
        for (int i = 0; i < rank_; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (int k = 0; k < rank_; ++k)
                for (int j = 0; j < rank_; ++j) {
                    int64_t c = N(i, j, k);
                    if (c != 0) m.at(k, j) += x[i] * c;
                }
        }
        return m;
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        check_vec(a);
        check_vec(b);
        Vec out(rank_, Int(0));
        for (int i = 0; i < rank_; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (int j = 0; j < rank_; ++j) {
                if (sgn(b[j]) == 0) continue;
                Int prod = a[i] * b[j];
                for (int k = 0; k < rank_; ++k) {
                    int64_t c = N(i, j, k);
                    if (c != 0) out[k] += prod * c;
                }
            }
        }
        return out;
    }

    Vec dual_of(const Vec& x) const {
        check_vec(x);
        Vec out(rank_, Int(0));
        for (int i = 0; i < rank_; ++i) out[dual_[i]] = x[i];
        return out;
    }

    /// Full axiom audit; reports the first violation found.
    AxiomCheck verify_axioms() const {
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                for (int k = 0; k < rank_; ++k)
                    if (N(i, j, k) < 0)
                        return fail("nonnegativity", ijk(i, j, k) + " = " + std::to_string(N(i, j, k)));
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k) {
                int64_t want = (j == k) ? 1 : 0;
                if (N(unit_, j, k) != want)
                    return fail("unit", "N[unit][" + std::to_string(j) + "][" + std::to_string(k) + "]");
                if (N(j, unit_, k) != want)
                    return fail("unit", "N[" + std::to_string(j) + "][unit][" + std::to_string(k) + "]");
            }
        for (int i = 0; i < rank_; ++i)
            if (dual_[dual_[i]] != i)
                return fail("duality-involution", "dual(dual(" + std::to_string(i) + ")) != " + std::to_string(i));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) {
                int64_t want = (dual_[i] == j) ? 1 : 0;
                if (N(i, j, unit_) != want)
                    return fail("duality-pairing",
                                "N[" + std::to_string(i) + "][" + std::to_string(j) + "][unit] = " +
                                    std::to_string(N(i, j, unit_)) + ", expected " + std::to_string(want));
            }
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                for (int k = 0; k < rank_; ++k)
                    if (N(i, j, k) != N(dual_[j], dual_[i], dual_[k]))
                        return fail("duality-compatibility", ijk(i, j, k));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < i; ++j)
                for (int k = 0; k < rank_; ++k)
                    if (N(i, j, k) != N(j, i, k))
                        return fail("commutativity", ijk(i, j, k));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                for (int k = 0; k < rank_; ++k)
                    for (int l = 0; l < rank_; ++l) {
                        int64_t lhs = 0, rhs = 0;
                        for (int m = 0; m < rank_; ++m) {
                            lhs += N(i, j, m) * N(m, k, l);
                            rhs += N(j, k, m) * N(i, m, l);
                        }
                        if (lhs != rhs)
                            return fail("associativity",
                                        "(i,j,k,l) = (" + std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + "," + std::to_string(l) + ")");
                    }
        return AxiomCheck{};
    }

private:
    int rank_;
    std::vector<std::string> labels_;
    int unit_;
    std::vector<int> dual_;
    std::vector<int64_t> n_;

    void check_vec(const Vec& v) const {
        if (static_cast<int>(v.size()) != rank_)
            throw InvalidInput("element coefficient vector has wrong length");
    }

    static std::string ijk(int i, int j, int k) {
        return "N[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
    }

    static AxiomCheck fail(const std::string& axiom, const std::string& witness) {
        return AxiomCheck{false, axiom, witness};
    }
};

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

inline bool vec_is_nonneg(const Vec& a) {
    for (const auto& x : a)
        if (sgn(x) < 0) return false;
    return true;
}

/// "2*L1 + L3 - L5" style rendering over the ring's labels.
inline std::string element_to_string(const BasedRing& r, const Vec& v) {
    std::string s;
    for (int i = 0; i < r.rank(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Int mag = abs(v[i]);
        if (s.empty())
            s += (sgn(v[i]) < 0) ? "-" : "";
        else
            s += (sgn(v[i]) < 0) ? " - " : " + ";
        if (mag != 1) s += mag.get_str() + "*";
        s += r.label(i);
    }
    return s.empty() ? "0" : s;
}

}
