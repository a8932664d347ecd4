#include "doctest.h"

#include "kring/roots.hpp"

using namespace kring;

static Poly P(std::vector<long> c) { return Poly::from_int_coeffs(c); }

static IMat imat(int n, std::vector<long> vals) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Int(vals[i * n + j]);
    return m;
}

TEST_CASE("sturm root counting") {
    // Sign evaluations give roots of t^3-2t^2-t+1 in (-1,0), (0,1), (2,3).
    Poly p = P({1, -1, -2, 1});
    SturmChain chain(p);
    CHECK(chain.count_in(Rat(-10), Rat(10)) == 3);
    CHECK(chain.count_in(Rat(-1), Rat(0)) == 1);
    CHECK(chain.count_in(Rat(0), Rat(1)) == 1);
    CHECK(chain.count_in(Rat(2), Rat(3)) == 1);
    CHECK(chain.count_in(Rat(1), Rat(2)) == 0);
}

TEST_CASE("isolate real roots of a cubic") {
    Poly p = P({1, -1, -2, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    std::vector<std::pair<Rat, Rat>> boxes = {
        {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(3)}};
    for (size_t i = 0; i < 3; ++i) {
        auto r = roots[i];
        r.refine_to(Rat(1, 1000));
        CHECK(r.lo() >= boxes[i].first);
        CHECK(r.hi() <= boxes[i].second);
    }
}

TEST_CASE("isolation with rational roots and multiplicities") {
    // (t-1)^2 (t-2) (t-3): distinct roots 1, 2, 3.
    Poly p = P({-1, 1}) * P({-1, 1}) * P({-2, 1}) * P({-3, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    std::vector<long> expect = {1, 2, 3};
    for (size_t i = 0; i < 3; ++i) {
        auto r = roots[i];
        r.refine_to(Rat(1, 100));
        CHECK(r.contains(Rat(expect[i])));
    }
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
    CHECK(isolate_real_roots(P({7})).empty());
}

TEST_CASE("interval refinement converges") {
    Poly p = P({-2, 0, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    RootInterval pos = roots[1];
    pos.refine_to(Rat(1, 1000000));
    CHECK(pos.width() <= Rat(1, 1000000));
    // lo^2 < 2 < hi^2 pins sqrt(2).
    CHECK(pos.lo() > 0);
    CHECK(pos.lo() * pos.lo() < 2);
    CHECK(pos.hi() * pos.hi() > 2);
}

TEST_CASE("all roots inside the cauchy bound") {
    Poly p = P({5, -4, -3, 0, 1});
    Rat b = cauchy_root_bound(p);
    for (auto& r : isolate_real_roots(p)) {
        CHECK(r.lo() > -b);
        CHECK(r.hi() < b);
    }
}

TEST_CASE("integer roots") {
    Poly p = P({-1, 1}) * P({-2, 1}) * P({-3, 1});
    CHECK(integer_roots(p) == std::vector<Int>{1, 2, 3});
    CHECK(integer_roots(P({1, -1, -2, 1})).empty());
    CHECK(integer_roots(P({0, 0, 1})) == std::vector<Int>{0});
    CHECK(integer_roots(P({0, -4, 0, 1})) == std::vector<Int>{-2, 0, 2});
}

TEST_CASE("perron root exact cases") {
    // Multiplication-by-Y matrix in the rank-3 ring with X^2=1, XY=Y,
    // Y^2=1+X+Y: char poly t(t-2)(t+1), Perron root exactly 2.
    auto pr = perron_root(imat(3, {0, 0, 1, 0, 0, 1, 1, 1, 1}));
    REQUIRE(pr.exact.has_value());
    CHECK(*pr.exact == Int(2));
    CHECK(pr.interval.is_exact());
    CHECK(pr.char_poly == P({0, -2, -1, 1}));

    auto swap2 = perron_root(imat(2, {0, 1, 1, 0}));
    REQUIRE(swap2.exact.has_value());
    CHECK(*swap2.exact == Int(1));

    auto id3 = perron_root(imat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    REQUIRE(id3.exact.has_value());
    CHECK(*id3.exact == Int(1));
}

TEST_CASE("perron root irrational cases") {
    auto pr = perron_root(imat(2, {0, 2, 1, 0}));
    CHECK(!pr.exact.has_value());
    auto iv = pr.interval;
    iv.refine_to(Rat(1, 10000));
    CHECK(iv.lo() * iv.lo() < 2);
    CHECK(iv.hi() * iv.hi() > 2);

    // Multiplication-by-X matrix in the rank-3 ring with X^2=1+Y, XY=X+Y,
    // Y^2=1+X+Y: char poly t^3-t^2-2t+1.
    auto prx = perron_root(imat(3, {0, 1, 0, 1, 0, 1, 0, 1, 1}));
    CHECK(prx.char_poly == P({1, -2, -1, 1}));
    CHECK(!prx.exact.has_value());
    auto ix = prx.interval;
    ix.refine_to(Rat(1, 1000));
    CHECK(ix.lo() > Rat(18, 10));
    CHECK(ix.hi() < Rat(19, 10));

    // Multiplication-by-Y matrix in the same ring: char poly t^3-2t^2-t+1.
    auto pry = perron_root(imat(3, {0, 0, 1, 0, 1, 1, 1, 1, 1}));
    CHECK(pry.char_poly == P({1, -1, -2, 1}));
    auto iy = pry.interval;
    iy.refine_to(Rat(1, 1000));
    CHECK(iy.lo() > Rat(224, 100));
    CHECK(iy.hi() < Rat(225, 100));
}

TEST_CASE("perron root rejects negative entries") {
    IMat m(2, 2);
    m.at(0, 1) = -1;
    CHECK_THROWS_AS(perron_root(m), InvalidInput);
}
