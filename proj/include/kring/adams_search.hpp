#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kring/based_ring.hpp"
#include "kring/endomorphism.hpp"
#include "kring/error.hpp"
#include "kring/matrix.hpp"
#include "kring/verlinde.hpp"

namespace kring {

/// All integer matrices M (column j = image of b_j) that could be the second
/// Adams operation of a symmetric fusion category with Grothendieck ring r:
///   - the unit is fixed;
///   - the unit coefficient of psi(b) is +-1 for self-dual non-unit b
///     (exactly one of S^2(b), Lambda^2(b) contains the unit once) and 0
///     otherwise (the unit is not a summand of b^2);
///   - psi(b) == b^2 mod 2 coefficientwise;
///   - M is a ring endomorphism commuting with duality (endo_check).
/// Non-unit coefficients range over [-coeff_bound, coeff_bound]. Candidates
/// are emitted in odometer order over the constrained entries (columns
/// ascending, rows ascending within a column, values ascending), so the
/// output is deterministic.
inline std::vector<IMat> adams_candidate_search(const BasedRing& r, long coeff_bound,
                                                double budget = 1e8) {
    if (coeff_bound < 1)
        throw InvalidInput("adams_candidate_search: coeff_bound must be >= 1");
    int n = r.rank();
    struct Slot {
        int row, col;
        std::vector<long> values;
    };
    std::vector<Slot> slots;
    double estimate = 1.0;
    for (int j = 0; j < n; ++j) {
        if (j == r.unit()) continue;
        for (int k = 0; k < n; ++k) {
            Slot s{k, j, {}};
            if (k == r.unit()) {
                if (r.dual(j) == j)
                    s.values = {-1, 1};
                else
                    s.values = {0};
            } else {
                long parity = static_cast<long>(r.N(j, j, k) % 2);
                for (long v = -coeff_bound; v <= coeff_bound; ++v)
                    if (((v % 2) + 2) % 2 == parity) s.values.push_back(v);
            }
            if (s.values.empty()) return {};
            estimate *= static_cast<double>(s.values.size());
            slots.push_back(std::move(s));
        }
    }
    if (estimate > budget)
        throw BudgetExceeded("adams_candidate_search: assignment space larger than budget",
                             estimate, budget);

    std::vector<IMat> out;
    std::vector<size_t> idx(slots.size(), 0);
    IMat m(n, n);
    m.at(r.unit(), r.unit()) = 1;
    while (true) {
        for (size_t s = 0; s < slots.size(); ++s)
            m.at(slots[s].row, slots[s].col) = slots[s].values[idx[s]];
        if (endo_check(r, m).all()) out.push_back(m);
        size_t pos = slots.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < slots[pos].values.size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
        if (slots.empty()) return out;
    }
}

/// Exact profile of one Adams candidate together with the eliminations that
/// follow from K-theoretic theorems about second Adams operations:
///   - psi_2 is never the identity on a ring of rank > 1;
///   - an invertible psi_2 of a ring with exactly two self-dual basis
///     elements has even order.
/// A power relation psi^a = psi^(a-1) restricts to the super-Tannakian case;
/// that is categorical input, so it is flagged but never eliminates.
struct CandidateProfile {
    IMat matrix;
    bool is_identity = false;
    bool invertible = false;
    std::optional<long> order;
    int image_rank = 0;
    std::vector<long> power_relations;
    int self_dual_count = 0;
    bool eliminated = false;
    std::string elimination_reason;
    bool super_tannakian_only = false;
    std::string categorical_note;

    bool viable() const { return !eliminated; }
};

inline CandidateProfile classify_candidate(const BasedRing& r, const IMat& m,
                                           long max_order = 24) {
    if (m.rows() != r.rank() || m.cols() != r.rank())
        throw InvalidInput("classify_candidate: matrix shape does not match ring rank");
    if (max_order < 1) throw InvalidInput("classify_candidate: max_order must be >= 1");
    CandidateProfile out;
    out.matrix = m;
    out.is_identity = (m == IMat::identity(r.rank()));
    Int d = m.det();
    out.invertible = (d == 1 || d == -1);
    out.order = endo_order(m, max_order);
    out.image_rank = image_rank(m);
    out.power_relations = endo_power_relations(m, max_order);
    for (int i = 0; i < r.rank(); ++i)
        if (r.dual(i) == i) ++out.self_dual_count;
    if (out.is_identity && r.rank() > 1) {
        out.eliminated = true;
        out.elimination_reason =
            "the second Adams operation is never the identity on a ring of rank > 1";
    } else if (out.invertible && out.order && *out.order % 2 == 1 && *out.order > 1 &&
               out.self_dual_count == 2) {
        out.eliminated = true;
        out.elimination_reason =
            "invertible of odd order " + std::to_string(*out.order) +
            "; with exactly two self-dual basis elements the order must be even";
    }
    if (!out.power_relations.empty()) {
        out.super_tannakian_only = true;
        std::string as;
        for (long a : out.power_relations) as += (as.empty() ? "" : ",") + std::to_string(a);
        out.categorical_note = "psi^a = psi^(a-1) for a in {" + as +
                               "}; compatible only with the super-Tannakian case "
                               "(categorical input, not decided here)";
    }
    return out;
}

/// Ascending n in [1, max_n] with 2^n == +-1 mod p. These are the possible
/// finite orders of the squaring Galois automorphism acting on Q(z + z^-1)
/// for a primitive p-th root z; the minimal entry is that automorphism's
/// exact order.
inline std::vector<long> admissible_adams_orders(long p, long max_n) {
    require_verlinde_prime(p);
    if (max_n < 1) throw InvalidInput("admissible_adams_orders: max_n must be >= 1");
    std::vector<long> out;
    long pw = 1;
    for (long n = 1; n <= max_n; ++n) {
        pw = (pw * 2) % p;
        if (pw == 1 || pw == p - 1) out.push_back(n);
    }
    return out;
}

}
