#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/matrix.hpp"

namespace kring {

struct EndoCheck {
    bool is_hom = true;
    bool fixes_unit = true;
    bool commutes_with_dual = true;
    std::string witness;

    bool all() const { return is_hom && fixes_unit && commutes_with_dual; }
};

/// Audit an additive endomorphism (column j = image of b_j) for ring-map
/// properties. Multiplicativity on all basis pairs is checked through the
/// matrix identity M * Fus(b_i) = Mul(M e_i) * M, which is equivalent to
/// f(b_i x) = f(b_i) f(x) for all x.
inline EndoCheck endo_check(const BasedRing& r, const IMat& m) {
    if (m.rows() != r.rank() || m.cols() != r.rank())
        throw InvalidInput("endo_check: matrix shape does not match ring rank");
    EndoCheck out;
    for (int k = 0; k < r.rank(); ++k) {
        Int want = (k == r.unit()) ? 1 : 0;
        if (m.at(k, r.unit()) != want) {
            out.fixes_unit = false;
            out.witness = "image of unit differs from unit at coordinate " + std::to_string(k);
            break;
        }
    }
    for (int j = 0; j < r.rank() && out.commutes_with_dual; ++j)
        for (int k = 0; k < r.rank(); ++k)
            if (m.at(k, r.dual(j)) != m.at(r.dual(k), j)) {
                out.commutes_with_dual = false;
                if (out.witness.empty())
                    out.witness = "dual-compatibility fails at (k,j) = (" + std::to_string(k) + "," +
                                  std::to_string(j) + ")";
                break;
            }
    for (int i = 0; i < r.rank(); ++i) {
        Vec fi(r.rank());
        for (int k = 0; k < r.rank(); ++k) fi[k] = m.at(k, i);
        IMat lhs = m * r.fusion_matrix(i);
        IMat rhs = r.multiplication_matrix(fi) * m;
        if (lhs != rhs) {
            out.is_hom = false;
            if (out.witness.empty())
                out.witness = "multiplicativity fails for products with basis element " +
                              r.label(i);
            break;
        }
    }
    return out;
}

/// Smallest k in [1, max_n] with m^k = id, if the matrix is invertible over
/// the integers and such k exists. Invertibility is decided by det = +-1;
/// the rational inverse is additionally computed and checked integral.
inline std::optional<long> endo_order(const IMat& m, long max_n) {
    if (m.rows() != m.cols()) throw InvalidInput("endo_order: matrix not square");
    Int d = m.det();
    if (d != 1 && d != -1) return std::nullopt;
    auto inv = m.to_rational().inverse();
    if (!inv)
        throw InternalCheckFailure("endo_order: unimodular matrix without rational inverse");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (inv->at(i, j).get_den() != 1)
                throw InternalCheckFailure("endo_order: unimodular matrix with non-integer inverse");
    IMat id = IMat::identity(m.rows());
    IMat acc = m;
    for (long k = 1; k <= max_n; ++k) {
        if (acc == id) return k;
        acc = acc * m;
    }
    return std::nullopt;
}

/// All a in [1, max_n] with m^a = m^(a-1).
inline std::vector<long> endo_power_relations(const IMat& m, long max_n) {
    if (m.rows() != m.cols()) throw InvalidInput("endo_power_relations: matrix not square");
    std::vector<long> out;
    IMat prev = IMat::identity(m.rows());
    IMat cur = m;
    for (long a = 1; a <= max_n; ++a) {
        if (cur == prev) out.push_back(a);
        if (a < max_n) {
            IMat next = cur * m;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return out;
}

/// Rank over the rationals of the endomorphism's image.
inline int image_rank(const IMat& m) { return m.to_rational().rank(); }

}
