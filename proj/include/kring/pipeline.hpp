#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kring/adams_search.hpp"
#include "kring/based_ring.hpp"
#include "kring/error.hpp"
#include "kring/field_membership.hpp"
#include "kring/parallel.hpp"
#include "kring/poly.hpp"
#include "kring/rank3.hpp"
#include "kring/rank4.hpp"
#include "kring/ring_analysis.hpp"
#include "kring/ring_io.hpp"
#include "kring/verlinde.hpp"

namespace kring {

/// Primes 5..100, the default range for the dimension-field obstruction.
inline std::vector<long> default_obstruction_primes() { return primes_in_range(5, 100); }

// ---------------------------------------------------------------------------
// FP-dimension field obstruction
// ---------------------------------------------------------------------------

/// Per-prime verdicts of the dimension-field test: a fusion ring coming from
/// a symmetric fusion category in characteristic p has all FP dimensions in
/// Q(z + z^-1) for a primitive p-th root z, so every basis element's
/// FP-dimension minimal polynomial must have a root there.
struct FieldObstruction {
    std::vector<Poly> min_polys;   // distinct minimal polynomials, basis order
    std::vector<long> pass_primes; // primes where every polynomial has a root
    std::vector<long> fail_primes;
    bool fails_all = false;        // nonempty prime list with no passing prime
    std::optional<Poly> witness;   // a polynomial with a root at none of the primes
};

inline FieldObstruction fpdim_field_obstruction(const BasedRing& r,
                                                const std::vector<long>& primes) {
    FieldObstruction out;
    for (int i = 0; i < r.rank(); ++i) {
        Poly f = fpdim_min_poly(r, i);
        bool seen = false;
        for (const Poly& g : out.min_polys) seen = seen || g == f;
        if (!seen) out.min_polys.push_back(std::move(f));
    }
    std::vector<std::vector<bool>> root_at(out.min_polys.size(),
                                           std::vector<bool>(primes.size(), false));
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        bool all_ok = true;
        for (size_t fi = 0; fi < out.min_polys.size(); ++fi) {
            root_at[fi][pi] = has_root_in_real_cyclotomic(out.min_polys[fi], primes[pi]).has_root;
            all_ok = all_ok && root_at[fi][pi];
        }
        (all_ok ? out.pass_primes : out.fail_primes).push_back(primes[pi]);
    }
    out.fails_all = !primes.empty() && out.pass_primes.empty();
    if (out.fails_all)
        for (size_t fi = 0; fi < out.min_polys.size() && !out.witness; ++fi) {
            bool nowhere = true;
            for (size_t pi = 0; pi < primes.size(); ++pi) nowhere = nowhere && !root_at[fi][pi];
            if (nowhere) out.witness = out.min_polys[fi];
        }
    return out;
}

// ---------------------------------------------------------------------------
// Named Adams coefficients
// ---------------------------------------------------------------------------

struct NamedCoefficient {
    std::string name;
    Int value;
};

/// Coefficient names for the rank-3 family (basis 1, X, Y, all self-dual):
///   psi(X) = epsilon1*1 + alpha*X + beta*Y
///   psi(Y) = epsilon2*1 + gamma*X + delta*Y
inline std::vector<NamedCoefficient> rank3_adams_symbols(const IMat& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw InvalidInput("rank3_adams_symbols: expected a 3 x 3 matrix");
    return {{"epsilon1", m.at(0, 1)}, {"alpha", m.at(1, 1)}, {"beta", m.at(2, 1)},
            {"epsilon2", m.at(0, 2)}, {"gamma", m.at(1, 2)}, {"delta", m.at(2, 2)}};
}

/// Coefficient names for the rank-4 family (basis 1, X, Y, Z; X* = Z):
///   psi(X) = alpha1*X + alpha2*Y + alpha3*Z
///   psi(Y) = epsilon*1 + beta1*X + beta2*Y + beta3*Z
///   psi(Z) = gamma1*X + gamma2*Y + gamma3*Z
inline std::vector<NamedCoefficient> rank4_adams_symbols(const IMat& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw InvalidInput("rank4_adams_symbols: expected a 4 x 4 matrix");
    return {{"alpha1", m.at(1, 1)}, {"alpha2", m.at(2, 1)}, {"alpha3", m.at(3, 1)},
            {"epsilon", m.at(0, 2)}, {"beta1", m.at(1, 2)}, {"beta2", m.at(2, 2)},
            {"beta3", m.at(3, 2)},   {"gamma1", m.at(1, 3)}, {"gamma2", m.at(2, 3)},
            {"gamma3", m.at(3, 3)}};
}

/// Generic coefficient names "psi(b)[c]" = coefficient of c in psi(b).
inline std::vector<NamedCoefficient> generic_adams_symbols(const BasedRing& r, const IMat& m) {
    std::vector<NamedCoefficient> out;
    for (int j = 0; j < r.rank(); ++j) {
        if (j == r.unit()) continue;
        for (int k = 0; k < r.rank(); ++k)
            out.push_back({"psi(" + r.label(j) + ")[" + r.label(k) + "]", m.at(k, j)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Report structures
// ---------------------------------------------------------------------------

struct AdamsCandidateReport {
    CandidateProfile profile;
    std::vector<NamedCoefficient> symbols;
    std::vector<long> order_compatible_primes;  // tested primes with 2^order = +-1
    bool matches_verlinde_adams = false;
};

struct AdamsFilterReport {
    bool exists = false;
    int count = 0;
    int viable_count = 0;
    std::vector<AdamsCandidateReport> candidates;
};

struct IntegralityReport {
    bool integral = false;
    bool closed_form_checked = false;  // rank-3: square tests cross-checked
    std::string reason;
};

/// Informational only: residues of the global dimension modulo the tested
/// primes, defined for integral rings.
struct DimModPReport {
    bool defined = false;
    Int global_dim;
    std::vector<std::pair<long, long>> residues;
};

struct TotalDimReport {
    Poly min_poly;
    std::optional<Int> exact;
    Rat lo, hi;                       // certified enclosure of the Perron value
    std::string closed_form;          // quadratic case: "(a + s*sqrt(d))/2"
    std::string alternative_form;     // a competing closed-form value, when one is known
    bool alternative_checked = false;
    bool alternative_satisfies = false;
    std::string alternative_residue;  // min_poly evaluated at the alternative value
    std::string note;
};

struct ObstructionReport {
    std::string family;  // "rank3" | "rank4" | "ring"
    std::vector<Int> params;
    std::vector<Int> canonical_params;  // rank-3: swap-class representative
    std::string known_name;
    std::string status;  // "identified" | "survives" | "eliminated"
    std::string elimination_reason;
    std::vector<int> decomposition;
    bool axioms_ok = true;
    IntegralityReport integrality;
    AdamsFilterReport adams;
    FieldObstruction field;
    DimModPReport dim_mod_p;
    TotalDimReport total_dim;
};

// ---------------------------------------------------------------------------
// Closed forms and exact evaluation at quadratic irrationals
// ---------------------------------------------------------------------------

namespace detail {

/// f(a + b*sqrt(d)) as a pair (u, v) meaning u + v*sqrt(d).
inline std::pair<Rat, Rat> eval_poly_at_quadratic(const Poly& f, const Rat& a, const Rat& b,
                                                  const Int& d) {
    Rat u(0), v(0);
    for (long k = f.degree(); k >= 0; --k) {
        Rat nu = u * a + v * b * Rat(d);
        Rat nv = u * b + v * a;
        u = nu + f.coeff(k);
        v = nv;
    }
    return {u, v};
}

inline std::string quadratic_value_str(const Rat& u, const Rat& v, const Int& d) {
    if (sgn(v) == 0) return u.get_str();
    std::string s = u.get_str();
    s += (sgn(v) < 0) ? " - " : " + ";
    Rat mag = abs(v);
    if (mag != 1) s += mag.get_str() + "*";
    s += "sqrt(" + d.get_str() + ")";
    return s;
}

/// Largest square divisor split: n = s^2 * d with d squarefree.
inline void split_square(const Int& n, Int& s, Int& d) {
    s = 1;
    d = n;
    for (Int f = 2; f * f <= d; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
}

/// For a monic integer quadratic t^2 + Bt + C with positive non-square
/// discriminant: the larger root as "(−B + s*sqrt(d))/2". Empty string when
/// the shape does not apply.
inline std::string quadratic_closed_form(const Poly& f, Rat& root_a, Rat& root_b, Int& root_d) {
    if (f.degree() != 2 || f.coeff(2) != 1) return "";
    if (f.coeff(1).get_den() != 1 || f.coeff(0).get_den() != 1) return "";
    Int B = f.coeff(1).get_num(), C = f.coeff(0).get_num();
    Int disc = B * B - 4 * C;
    if (sgn(disc) <= 0 || is_square(disc)) return "";
    Int s, d;
    split_square(disc, s, d);
    root_a = Rat(-B, 2);
    root_b = Rat(s, 2);
    root_d = d;
    Rat u = root_a * 2, v = root_b * 2;
    return "(" + quadratic_value_str(u, v, d) + ")/2";
}

}

// ---------------------------------------------------------------------------
// Known fusion rings
// ---------------------------------------------------------------------------

/// True when some basis relabeling fixing the unit carries one ring onto the
/// other (tensor and duality both transported).
inline bool rings_isomorphic_by_relabeling(const BasedRing& a, const BasedRing& b) {
    if (a.rank() != b.rank()) return false;
    int n = a.rank();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        if (perm[a.unit()] != b.unit()) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = b.dual(perm[i]) == perm[a.dual(i)];
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    ok = b.N(perm[i], perm[j], perm[k]) == a.N(i, j, k);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Name of the ring among the classification's known tables, if any.
inline std::string known_name_of(const BasedRing& r) {
    struct Known {
        const char* name;
        BasedRing ring;
    };
    static const std::vector<Known> knowns = [] {
        std::vector<Known> v;
        v.push_back({"Rep(S3)", build_rank3({Int(0), Int(1), Int(0), Int(1)})});
        v.push_back({"Ver7+", build_rank3({Int(1), Int(1), Int(0), Int(1)})});
        v.push_back({"Z4", build_rank4({Int(0), Int(0), Int(0), Int(1), Int(0), Int(0)})});
        v.push_back({"A4", build_rank4({Int(1), Int(2), Int(1), Int(0), Int(0), Int(0)})});
        v.push_back({"Izumi-Xu", build_rank4({Int(1), Int(3), Int(1), Int(0), Int(0), Int(0)})});
        return v;
    }();
    for (const auto& k : knowns)
        if (rings_isomorphic_by_relabeling(r, k.ring)) return k.name;
    return "";
}

// ---------------------------------------------------------------------------
// Obstruction analysis
// ---------------------------------------------------------------------------

struct PipelineConfig {
    long coeff_bound = 2;
    std::vector<long> primes = default_obstruction_primes();
    double budget = 1e8;
    long max_order = 24;
    int workers = 1;
};

namespace detail {

inline std::vector<long> order_compatible_primes(long order, const std::vector<long>& primes) {
    std::vector<long> out;
    for (long p : primes) {
        long pw = 1;
        for (long i = 0; i < order; ++i) pw = (pw * 2) % p;
        if (pw == 1 || pw == p - 1) out.push_back(p);
    }
    return out;
}

enum class SymbolStyle { rank3, rank4, generic };

inline ObstructionReport analyze_based_ring(const std::string& family,
                                            const std::vector<Int>& params,
                                            const std::vector<Int>& canonical,
                                            const BasedRing& r, IntegralityReport integrality,
                                            const PipelineConfig& cfg, SymbolStyle style,
                                            const std::optional<IMat>& verlinde_adams) {
    ObstructionReport rep;
    rep.family = family;
    rep.params = params;
    rep.canonical_params = canonical;
    rep.axioms_ok = true;  // construction aborts on axiom failure
    rep.integrality = std::move(integrality);
    rep.decomposition = decomposition_type(r);
    rep.known_name = known_name_of(r);

    std::vector<IMat> found = adams_candidate_search(r, cfg.coeff_bound, cfg.budget);
    rep.adams.count = static_cast<int>(found.size());
    rep.adams.exists = !found.empty();
    for (const IMat& m : found) {
        AdamsCandidateReport cand;
        cand.profile = classify_candidate(r, m, cfg.max_order);
        switch (style) {
            case SymbolStyle::rank3: cand.symbols = rank3_adams_symbols(m); break;
            case SymbolStyle::rank4: cand.symbols = rank4_adams_symbols(m); break;
            case SymbolStyle::generic: cand.symbols = generic_adams_symbols(r, m); break;
        }
        if (cand.profile.order)
            cand.order_compatible_primes = order_compatible_primes(*cand.profile.order, cfg.primes);
        if (verlinde_adams) cand.matches_verlinde_adams = (m == *verlinde_adams);
        if (cand.profile.viable()) ++rep.adams.viable_count;
        rep.adams.candidates.push_back(std::move(cand));
    }

    rep.field = fpdim_field_obstruction(r, cfg.primes);

    if (rep.integrality.integral) {
        rep.dim_mod_p.defined = true;
        Int total(0);
        for (int i = 0; i < r.rank(); ++i) {
            FPDim d = fpdim(r, i);
            total += (*d.exact) * (*d.exact);
        }
        rep.dim_mod_p.global_dim = total;
        for (long p : cfg.primes) {
            Int m = total % p;
            if (sgn(m) < 0) m += p;
            rep.dim_mod_p.residues.push_back({p, m.get_si()});
        }
    }

    TotalDimExact te = total_fpdim_perron(r);
    TotalDim td = fpdim_total(r);
    if (te.perron.interval.hi() < td.lo || td.hi < te.perron.interval.lo())
        throw InternalCheckFailure(
            "analyze_based_ring: Perron total dimension disagrees with the interval sum");
    rep.total_dim.min_poly = te.min_poly;
    rep.total_dim.exact = te.perron.exact;
    rep.total_dim.lo = te.perron.interval.lo();
    rep.total_dim.hi = te.perron.interval.hi();
    Rat qa, qb;
    Int qd;
    rep.total_dim.closed_form = detail::quadratic_closed_form(te.min_poly, qa, qb, qd);
    if (rep.known_name == "Izumi-Xu") {
        // Record the competing printed value (21 + 2*sqrt(21))/2 next to the
        // computed Perron value and check it against the minimal polynomial.
        Rat aa(21, 2), ab(1);
        Int ad(21);
        auto [u, v] = detail::eval_poly_at_quadratic(te.min_poly, aa, ab, ad);
        rep.total_dim.alternative_form = "(21 + 2*sqrt(21))/2";
        rep.total_dim.alternative_checked = true;
        rep.total_dim.alternative_satisfies = (sgn(u) == 0 && sgn(v) == 0);
        rep.total_dim.alternative_residue = detail::quadratic_value_str(u, v, ad);
        rep.total_dim.note =
            "computed total FP dimension " +
            (rep.total_dim.closed_form.empty() ? "(see interval)" : rep.total_dim.closed_form) +
            " satisfies " + te.min_poly.to_string("t") + "; the alternative value " +
            rep.total_dim.alternative_form +
            (rep.total_dim.alternative_satisfies ? " also satisfies it"
                                                 : " does not (the polynomial evaluates to " +
                                                       rep.total_dim.alternative_residue + ")");
    }

    bool survives = rep.adams.viable_count > 0 && !rep.field.fails_all;
    if (survives) {
        rep.status = rep.known_name.empty() ? "survives" : "identified";
    } else {
        rep.status = "eliminated";
        std::string why;
        if (rep.adams.count == 0) {
            why = "no second-Adams-operation candidate with coefficients bounded by " +
                  std::to_string(cfg.coeff_bound);
        } else if (rep.adams.viable_count == 0) {
            why = "all " + std::to_string(rep.adams.count) + " Adams candidates eliminated (" +
                  rep.adams.candidates.front().profile.elimination_reason + ")";
        }
        if (rep.field.fails_all) {
            if (!why.empty()) why += "; ";
            why += "FP dimensions lie in Q(z_p + z_p^-1) for none of the " +
                   std::to_string(cfg.primes.size()) + " tested primes";
            if (!cfg.primes.empty())
                why += " (" + std::to_string(cfg.primes.front()) + " <= p <= " +
                       std::to_string(cfg.primes.back()) + ")";
            if (rep.field.witness)
                why += "; witness minimal polynomial " + rep.field.witness->to_string("t");
        }
        rep.elimination_reason = why;
    }
    return rep;
}

}

// ---------------------------------------------------------------------------
// Family pipelines
// ---------------------------------------------------------------------------

/// The tuple pattern k = e = 0, q = 1 can never satisfy the defining
/// relations: the second relation forces l = 0 and the third then reads
/// c^2 = 2 + p^2, which has no integer solutions (consecutive squares differ
/// by more than 2 beyond 1). Returns true when the pattern applies to t, in
/// which case rank4_relations_hold(t) is guaranteed false.
inline bool rank4_insoluble_pattern(const Rank4Params& t) {
    if (!(sgn(t.k) == 0 && sgn(t.e) == 0 && t.q == 1)) return false;
    if (rank4_relations_hold(t))
        throw InternalCheckFailure(
            "rank4_insoluble_pattern: pattern tuple satisfies the relations");
    return true;
}

/// Certificate that within the rank-3 subfamily (0,1,0,n) the ring is
/// integral exactly for n = 1, for every n >= 0 (not only the scanned ones):
/// integrality needs n^2 + 8 to be a square; for n >= 4 it lies strictly
/// between n^2 and (n+1)^2, and n <= 3 is checked directly.
struct FamilyCertificate {
    bool certified = false;
    std::vector<long> integral_members;
    std::string argument;
};

inline FamilyCertificate rank3_family_certificate() {
    FamilyCertificate out;
    for (long n = 0; n <= 3; ++n)
        if (is_square(Int(n) * Int(n) + 8)) out.integral_members.push_back(n);
    bool small_ok = out.integral_members == std::vector<long>{1};
    // For n >= 4: 0 < (n^2 + 8) - n^2 = 8 and (n+1)^2 - (n^2+8) = 2n - 7 > 0,
    // an increasing linear form positive at n = 4.
    bool tail_ok = (2 * 4 - 7 > 0);
    out.certified = small_ok && tail_ok;
    if (!out.certified)
        throw InternalCheckFailure("rank3_family_certificate: certificate checks failed");
    out.argument =
        "n^2 + 8 is a square only for n = 1: direct check for n <= 3; for n >= 4 the value "
        "lies strictly between n^2 and (n+1)^2 since (n+1)^2 - (n^2+8) = 2n-7 >= 1";
    return out;
}

/// One enumerated rank-3 ring through every filter. For swap class
/// {(1,1,0,1), (1,1,1,0)} the second Adams operation of the odd part of the
/// p = 7 Verlinde ring is transported along 1 = L1 and (X, Y) = (L5, L3) or
/// (L3, L5), and matching candidates are flagged.
inline ObstructionReport obstruct_rank3(const Rank3Params& t, const PipelineConfig& cfg) {
    BasedRing r = build_rank3(t);
    Rank3Integrality integ = rank3_integrality_filter(t);
    IntegralityReport irep{integ.integral, true, integ.reason};
    std::optional<IMat> transported;
    Rank3Params canon = t.canonical();
    if (canon == Rank3Params{Int(1), Int(1), Int(0), Int(1)}) {
        IMat plus = adams_verlinde_plus(7);  // basis order L1, L3, L5
        std::vector<int> to_ring(3);
        to_ring[0] = 0;
        if (t == canon) {  // (1,1,0,1): X = L5, Y = L3
            to_ring[1] = 2;
            to_ring[2] = 1;
        } else {  // (1,1,1,0): X = L3, Y = L5
            to_ring[1] = 1;
            to_ring[2] = 2;
        }
        IMat m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(to_ring[i], to_ring[j]) = plus.at(i, j);
        transported = std::move(m);
    }
    return detail::analyze_based_ring("rank3", {t.k, t.l, t.m, t.n},
                                      {canon.k, canon.l, canon.m, canon.n}, r, std::move(irep),
                                      cfg, detail::SymbolStyle::rank3, transported);
}

inline ObstructionReport obstruct_rank4(const Rank4Params& t, const PipelineConfig& cfg) {
    BasedRing r = build_rank4(t);
    IntegralityReport irep;
    irep.closed_form_checked = false;
    irep.integral = true;
    for (int i = 0; i < r.rank() && irep.integral; ++i)
        if (!fpdim(r, i).exact) {
            irep.integral = false;
            irep.reason = "fpdim(" + r.label(i) + ") is irrational with minimal polynomial " +
                          fpdim_min_poly(r, i).to_string("t");
        }
    if (irep.integral) irep.reason = "integral";
    std::vector<Int> params{t.c, t.e, t.k, t.l, t.p, t.q};
    return detail::analyze_based_ring("rank4", params, params, r, std::move(irep), cfg,
                                      detail::SymbolStyle::rank4, std::nullopt);
}

/// Obstruction analysis of an arbitrary based ring (CLI entry point).
inline ObstructionReport obstruct_ring(const BasedRing& r, const PipelineConfig& cfg) {
    IntegralityReport irep;
    irep.closed_form_checked = false;
    irep.integral = true;
    for (int i = 0; i < r.rank() && irep.integral; ++i)
        if (!fpdim(r, i).exact) {
            irep.integral = false;
            irep.reason = "fpdim(" + r.label(i) + ") is irrational with minimal polynomial " +
                          fpdim_min_poly(r, i).to_string("t");
        }
    if (irep.integral) irep.reason = "integral";
    return detail::analyze_based_ring("ring", {}, {}, r, std::move(irep), cfg,
                                      detail::SymbolStyle::generic, std::nullopt);
}

struct PipelineResult {
    std::string family;
    long bound = 0;
    long coeff_bound = 0;
    std::vector<long> primes;
    std::vector<ObstructionReport> reports;               // canonical parameter order
    std::vector<std::vector<Int>> survivor_classes;       // deduped, sorted
    std::optional<FamilyCertificate> family_certificate;  // rank-3 only
};

namespace detail {

inline std::vector<std::vector<Int>> survivor_classes_of(
    const std::vector<ObstructionReport>& reports) {
    std::vector<std::vector<Int>> out;
    for (const auto& rep : reports)
        if (rep.status != "eliminated") out.push_back(rep.canonical_params);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}

/// Every rank-3 tuple with entries <= bound through the filter stack.
/// Survivor classes are swap-equivalence classes of surviving tuples.
inline PipelineResult classify_rank3_pipeline(long bound, long coeff_bound,
                                              PipelineConfig cfg = {}) {
    if (bound < 1 || coeff_bound < 1)
        throw InvalidInput("classify_rank3_pipeline: bounds must be >= 1");
    cfg.coeff_bound = coeff_bound;
    PipelineResult out;
    out.family = "rank3";
    out.bound = bound;
    out.coeff_bound = coeff_bound;
    out.primes = cfg.primes;
    std::vector<Rank3Params> tuples = enumerate_rank3(bound);
    out.reports = parallel_map<ObstructionReport>(
        tuples.size(), cfg.workers, [&](size_t i) { return obstruct_rank3(tuples[i], cfg); });
    out.survivor_classes = detail::survivor_classes_of(out.reports);
    out.family_certificate = rank3_family_certificate();
    return out;
}

inline PipelineResult classify_rank4_pipeline(long bound, long coeff_bound,
                                              PipelineConfig cfg = {}) {
    if (bound < 1 || coeff_bound < 1)
        throw InvalidInput("classify_rank4_pipeline: bounds must be >= 1");
    cfg.coeff_bound = coeff_bound;
    PipelineResult out;
    out.family = "rank4";
    out.bound = bound;
    out.coeff_bound = coeff_bound;
    out.primes = cfg.primes;
    std::vector<Rank4Params> tuples = enumerate_rank4(bound);
    out.reports = parallel_map<ObstructionReport>(
        tuples.size(), cfg.workers, [&](size_t i) { return obstruct_rank4(tuples[i], cfg); });
    out.survivor_classes = detail::survivor_classes_of(out.reports);
    return out;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline ojson report_to_json(const ObstructionReport& rep) {
    ojson j;
    j["family"] = rep.family;
    ojson params = ojson::array();
    for (const Int& v : rep.params) params.push_back(v.get_si());
    j["params"] = std::move(params);
    ojson canon = ojson::array();
    for (const Int& v : rep.canonical_params) canon.push_back(v.get_si());
    j["canonical_params"] = std::move(canon);
    j["known_name"] = rep.known_name;
    j["status"] = rep.status;
    j["elimination_reason"] = rep.elimination_reason;
    j["decomposition"] = rep.decomposition;
    ojson filters;
    filters["axioms"] = ojson{{"ok", rep.axioms_ok}};
    filters["integrality"] = ojson{{"integral", rep.integrality.integral},
                                   {"closed_form_checked", rep.integrality.closed_form_checked},
                                   {"reason", rep.integrality.reason}};
    ojson adams;
    adams["exists"] = rep.adams.exists;
    adams["count"] = rep.adams.count;
    adams["viable_count"] = rep.adams.viable_count;
    ojson cands = ojson::array();
    for (const auto& c : rep.adams.candidates) {
        ojson jc;
        ojson mat = ojson::array();
        for (int i = 0; i < c.profile.matrix.rows(); ++i) {
            ojson row = ojson::array();
            for (int k = 0; k < c.profile.matrix.cols(); ++k)
                row.push_back(c.profile.matrix.at(i, k).get_si());
            mat.push_back(std::move(row));
        }
        jc["matrix"] = std::move(mat);
        ojson sym;
        for (const auto& s : c.symbols) sym[s.name] = s.value.get_si();
        jc["symbols"] = std::move(sym);
        jc["is_identity"] = c.profile.is_identity;
        jc["invertible"] = c.profile.invertible;
        if (c.profile.order)
            jc["order"] = *c.profile.order;
        else
            jc["order"] = nullptr;
        jc["image_rank"] = c.profile.image_rank;
        jc["power_relations"] = c.profile.power_relations;
        jc["eliminated"] = c.profile.eliminated;
        jc["elimination_reason"] = c.profile.elimination_reason;
        jc["super_tannakian_only"] = c.profile.super_tannakian_only;
        jc["categorical_note"] = c.profile.categorical_note;
        jc["order_compatible_primes"] = c.order_compatible_primes;
        jc["matches_verlinde_adams"] = c.matches_verlinde_adams;
        cands.push_back(std::move(jc));
    }
    adams["candidates"] = std::move(cands);
    filters["adams"] = std::move(adams);
    ojson field;
    ojson polys = ojson::array();
    for (const Poly& f : rep.field.min_polys) polys.push_back(f.to_string("t"));
    field["min_polys"] = std::move(polys);
    field["pass_primes"] = rep.field.pass_primes;
    field["fail_primes"] = rep.field.fail_primes;
    field["fails_all"] = rep.field.fails_all;
    if (rep.field.witness)
        field["witness"] = rep.field.witness->to_string("t");
    else
        field["witness"] = nullptr;
    filters["fpdim_field"] = std::move(field);
    ojson dmp;
    dmp["defined"] = rep.dim_mod_p.defined;
    if (rep.dim_mod_p.defined) {
        dmp["global_dim"] = rep.dim_mod_p.global_dim.get_str();
        ojson res = ojson::array();
        for (const auto& [p, m] : rep.dim_mod_p.residues)
            res.push_back(ojson{{"p", p}, {"residue", m}});
        dmp["residues"] = std::move(res);
    }
    filters["dim_mod_p"] = std::move(dmp);
    j["filters"] = std::move(filters);
    ojson total;
    total["min_poly"] = rep.total_dim.min_poly.to_string("t");
    if (rep.total_dim.exact)
        total["exact"] = rep.total_dim.exact->get_str();
    else
        total["exact"] = nullptr;
    total["interval"] = ojson::array({rep.total_dim.lo.get_str(), rep.total_dim.hi.get_str()});
    total["closed_form"] = rep.total_dim.closed_form;
    if (rep.total_dim.alternative_checked) {
        total["alternative_form"] = rep.total_dim.alternative_form;
        total["alternative_satisfies_min_poly"] = rep.total_dim.alternative_satisfies;
        total["alternative_residue"] = rep.total_dim.alternative_residue;
        total["note"] = rep.total_dim.note;
    }
    j["total_dim"] = std::move(total);
    return j;
}

inline ojson pipeline_to_json(const PipelineResult& res) {
    ojson j;
    j["family"] = res.family;
    j["bound"] = res.bound;
    j["coeff_bound"] = res.coeff_bound;
    j["primes"] = res.primes;
    ojson survivors = ojson::array();
    for (const auto& cls : res.survivor_classes) {
        ojson c = ojson::array();
        for (const Int& v : cls) c.push_back(v.get_si());
        survivors.push_back(std::move(c));
    }
    j["survivor_classes"] = std::move(survivors);
    if (res.family_certificate) {
        ojson cert;
        cert["certified"] = res.family_certificate->certified;
        cert["integral_members"] = res.family_certificate->integral_members;
        cert["argument"] = res.family_certificate->argument;
        j["family_certificate"] = std::move(cert);
    }
    ojson reports = ojson::array();
    for (const auto& rep : res.reports) reports.push_back(report_to_json(rep));
    j["reports"] = std::move(reports);
    return j;
}

}
