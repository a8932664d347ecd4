#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kring/error.hpp"
#include "kring/galois.hpp"
#include "kring/matrix.hpp"
#include "kring/numeric.hpp"

namespace kring {

namespace detail {

inline Rat row_dot(const std::vector<Rat>& row, const std::vector<Rat>& v) {
    Rat s(0);
    for (size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
    return s;
}

/// Primitive integer vector by a positive scalar only: unlike
/// primitive_integer_vector, the direction is preserved, which matters for
/// cone rays.
inline Vec primitive_ray(const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& x : v) den = int_lcm(den, x.get_den());
    Vec w(v.size());
    Int g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (den / v[i].get_den());
        g = int_gcd(g, w[i]);
    }
    if (g == 0) return w;
    for (auto& x : w) x /= g;
    return w;
}

/// Rank of the submatrix of `a` made of the given rows.
inline int subrank(const Mat& a, const std::vector<int>& rows) {
    Mat sub(static_cast<int>(rows.size()), a.cols());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < a.cols(); ++c) sub.at(static_cast<int>(r), c) = a.at(rows[r], c);
    return sub.rank();
}

}

/// Extreme rays of the polyhedral cone { x : A x >= 0 }, which must be
/// pointed (rank A = number of columns). Double description: start from a
/// simplicial cone cut out by n independent rows, then add the remaining
/// halfspaces one at a time, combining adjacent positive/negative rays.
/// Rays are primitive integer vectors, returned sorted.
inline std::vector<Vec> cone_extreme_rays(const Mat& a, size_t max_rays = 100000) {
    int n = a.cols();
    int m = a.rows();
    if (a.rank() != n) throw InvalidInput("cone_extreme_rays: cone is not pointed");

    // Greedily pick n rows of full rank for the initial simplicial cone.
    std::vector<int> base;
    for (int r = 0; r < m && static_cast<int>(base.size()) < n; ++r) {
        base.push_back(r);
        if (detail::subrank(a, base) != static_cast<int>(base.size())) base.pop_back();
    }
    if (static_cast<int>(base.size()) != n)
        throw InternalCheckFailure("cone_extreme_rays: failed to seed simplicial cone");

    Mat eb(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) eb.at(r, c) = a.at(base[r], c);
    auto inv = eb.inverse();
    if (!inv) throw InternalCheckFailure("cone_extreme_rays: seed submatrix not invertible");

    struct Ray {
        Vec v;
        std::vector<int> active;  // processed rows where the ray is tight
    };

    std::vector<bool> processed(m, false);
    std::vector<int> done;
    for (int r : base) {
        processed[r] = true;
        done.push_back(r);
    }
    std::sort(done.begin(), done.end());

    auto ray_dot = [&](int row, const Vec& v) {
        Rat s(0);
        for (int c = 0; c < n; ++c) s += a.at(row, c) * Rat(v[c]);
        return s;
    };
    auto recompute_active = [&](Ray& ray) {
        ray.active.clear();
        for (int r : done)
            if (sgn(ray_dot(r, ray.v)) == 0) ray.active.push_back(r);
    };

    std::vector<Ray> rays;
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> col(n);
        for (int r = 0; r < n; ++r) col[r] = inv->at(r, j);
        Ray ray;
        ray.v = detail::primitive_ray(col);
        recompute_active(ray);
        rays.push_back(std::move(ray));
    }

    for (int row = 0; row < m; ++row) {
        if (processed[row]) continue;
        std::vector<int> pos, neg, zero;
        std::vector<Rat> vals(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            vals[i] = ray_dot(row, rays[i].v);
            int s = sgn(vals[i]);
            if (s > 0)
                pos.push_back(static_cast<int>(i));
            else if (s < 0)
                neg.push_back(static_cast<int>(i));
            else
                zero.push_back(static_cast<int>(i));
        }
        processed[row] = true;
        done.insert(std::lower_bound(done.begin(), done.end(), row), row);
        if (neg.empty()) {
            for (int i : zero) rays[i].active.push_back(row);
            std::sort(done.begin(), done.end());
            continue;
        }

        std::vector<Ray> next;
        for (int i : pos) next.push_back(rays[i]);
        for (int i : zero) {
            next.push_back(rays[i]);
            next.back().active.push_back(row);
        }
        for (auto& ray : next) std::sort(ray.active.begin(), ray.active.end());

        for (int ip : pos) {
            for (int in : neg) {
                std::vector<int> common;
                std::set_intersection(rays[ip].active.begin(), rays[ip].active.end(),
                                      rays[in].active.begin(), rays[in].active.end(),
                                      std::back_inserter(common));
                if (static_cast<int>(common.size()) < n - 2) continue;
                if (n > 2 && detail::subrank(a, common) != n - 2) continue;
                std::vector<Rat> w(n);
                for (int c = 0; c < n; ++c)
                    w[c] = vals[ip] * Rat(rays[in].v[c]) - vals[in] * Rat(rays[ip].v[c]);
                Ray ray;
                ray.v = detail::primitive_ray(w);
                bool dup = false;
                for (const auto& other : next)
                    if (other.v == ray.v) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                recompute_active(ray);
                next.push_back(std::move(ray));
                if (next.size() > max_rays)
                    throw BudgetExceeded("cone_extreme_rays", static_cast<double>(next.size()),
                                         static_cast<double>(max_rays));
            }
        }
        rays = std::move(next);
    }

    std::vector<Vec> out;
    for (auto& ray : rays) {
        for (int r = 0; r < m; ++r)
            if (sgn(ray_dot(r, ray.v)) < 0)
                throw InternalCheckFailure("cone_extreme_rays: ray violates a halfspace");
        out.push_back(std::move(ray.v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Dimension of the span of the extreme rays of { x : A x >= 0 }.
inline int cone_dimension(const Mat& a, size_t max_rays = 100000) {
    auto rays = cone_extreme_rays(a, max_rays);
    if (rays.empty()) return 0;
    Mat span(static_cast<int>(rays.size()), a.cols());
    for (size_t r = 0; r < rays.size(); ++r)
        for (int c = 0; c < a.cols(); ++c) span.at(static_cast<int>(r), c) = Rat(rays[r][c]);
    return span.rank();
}

/// Matrix whose rows are the simple-object coordinates of the k orbit sums
/// of one parity: the cone { lambda : E^T lambda has nonnegative rows } is
/// cut out in R^k by (p-1)/2 inequalities, one per simple object.
inline Mat orbit_coordinate_inequalities(const LExpansion& ex) {
    long half = (ex.p - 1) / 2;
    long k = static_cast<long>(ex.rows.size());
    Mat a(static_cast<int>(half), static_cast<int>(k));
    for (long r = 0; r < half; ++r)
        for (long c = 0; c < k; ++c) a.at(static_cast<int>(r), static_cast<int>(c)) = Rat(ex.rows[c][r]);
    return a;
}

/// Dimension of the cone of nonnegative combinations in the span of the
/// orbit sums of the given parity, for the order-m subgroup at level p.
inline int positivity_cone_dim(long p, long m, bool odd_parity, size_t max_rays = 100000) {
    GaloisOrbitData data = galois_orbits(p, m);
    LExpansion ex = l_expansion_of_orbit_sums(data, odd_parity);
    return cone_dimension(orbit_coordinate_inequalities(ex), max_rays);
}

struct RankBoundEntry {
    long k = 0;          // orbit count, a proper divisor of (p-1)/2 with k > 1
    long m = 0;          // subgroup order (p-1)/(2k)
    bool odd_parity = true;
    int cone_dim = 0;
    bool signs_mixed = true;  // every orbit sum has both signs in its coordinates
    bool ok() const { return cone_dim < k && signs_mixed; }
};

struct RankBoundReport {
    long p = 0;
    bool ok = true;
    std::vector<RankBoundEntry> entries;
};

/// For every proper intermediate divisor k of (p-1)/2 and both parities:
/// the positivity cone spanned inside the k-dimensional fixed subring is
/// degenerate (dimension < k), and every orbit sum has coordinates of both
/// signs, so no based ring of rank k embeds there with nonnegative
/// structure. k = 1 holds trivially (the unit spans); k = (p-1)/2 is the
/// full parity piece and is excluded.
inline RankBoundReport verify_rank_bound(long p, size_t max_rays = 100000) {
    require_verlinde_prime(p);
    RankBoundReport report;
    report.p = p;
    long half = (p - 1) / 2;
    for (long k = 2; k < half; ++k) {
        if (half % k != 0) continue;
        long m = half / k;
        GaloisOrbitData data = galois_orbits(p, m);
        for (bool odd_parity : {true, false}) {
            LExpansion ex = l_expansion_of_orbit_sums(data, odd_parity);
            RankBoundEntry entry;
            entry.k = k;
            entry.m = m;
            entry.odd_parity = odd_parity;
            entry.cone_dim = cone_dimension(orbit_coordinate_inequalities(ex), max_rays);
            entry.signs_mixed = true;
            for (const auto& row : ex.rows) {
                bool has_pos = false, has_neg = false;
                for (const auto& v : row) {
                    if (sgn(v) > 0) has_pos = true;
                    if (sgn(v) < 0) has_neg = true;
                }
                if (!has_pos || !has_neg) entry.signs_mixed = false;
            }
            if (!entry.ok()) report.ok = false;
            report.entries.push_back(entry);
        }
    }
    return report;
}

}
