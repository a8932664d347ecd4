#include "doctest.h"

#include "kring/cyclotomic.hpp"
#include "kring/galois.hpp"
#include "kring/verlinde.hpp"

using namespace kring;

namespace {

CycloReal b(long p, long i) { return CycloReal::basis(p, i); }

}

TEST_CASE("basis product rule b_i b_j = b_(i+j) + b_(i-j)") {
    CHECK(b(7, 1) * b(7, 1) == b(7, 2) + CycloReal::constant(7, 2));
    CHECK(b(7, 1) * b(7, 2) == b(7, 3) + b(7, 1));
    CHECK(b(7, 2) * b(7, 3) == b(7, 2) + b(7, 1));  // b_5 reduces to b_2
    // exponent reduction: at p = 5, index 3 folds to 2
    CHECK(b(5, 3) == b(5, 2));
    CHECK(b(5, 7) == b(5, 2));
    CHECK(b(5, -1) == b(5, 1));
}

TEST_CASE("the basis sums to -1") {
    for (long p : {5L, 7L, 11L, 13L}) {
        CycloReal s(p);
        for (long i = 1; i <= (p - 1) / 2; ++i) s = s + b(p, i);
        CHECK(s == CycloReal::constant(p, -1));
        CHECK((s + CycloReal::one(p)).is_zero());
    }
}

TEST_CASE("flat coordinates and equality") {
    CycloReal one = CycloReal::one(5);
    auto f = one.flat();
    REQUIRE(f.size() == 2);
    CHECK(f[0] == -1);
    CHECK(f[1] == -1);
    CHECK(CycloReal(5).is_zero());
    CHECK(one != CycloReal(5));
    CHECK(b(5, 1) != b(5, 2));
}

TEST_CASE("galois twist permutes the basis and respects products") {
    CHECK(b(7, 1).galois_twist(2) == b(7, 2));
    CHECK(b(7, 2).galois_twist(2) == b(7, 3));
    CHECK(b(7, 3).galois_twist(2) == b(7, 1));  // 6 folds to 1
    // twist by g twice equals twist by g^2
    CycloReal x = b(11, 1) + b(11, 3) * Rat(2) - CycloReal::one(11);
    CHECK(x.galois_twist(2).galois_twist(2) == x.galois_twist(4));
    // automorphism property on a sample product
    CycloReal y = b(11, 2) - b(11, 5);
    CHECK((x * y).galois_twist(3) == x.galois_twist(3) * y.galois_twist(3));
    CHECK(squaring_endomorphism(b(5, 1)) == b(5, 2));
}

TEST_CASE("embedding of odd simples") {
    CHECK(embed_plus_basis(5, 1) == CycloReal::one(5));
    CHECK(embed_plus_basis(5, 3) == CycloReal::one(5) + b(5, 2));
    // the last odd simple always lands on -b_1
    for (long p : {5L, 7L, 11L, 13L, 17L}) CHECK(embed_plus_basis(p, p - 2) == -b(p, 1));
    CHECK_THROWS_AS(embed_plus_basis(5, 2), InvalidInput);
    CHECK_THROWS_AS(embed_plus_basis(5, 5), InvalidInput);
}

TEST_CASE("embedding of even simples and graded pairs") {
    CycloPair l2 = embed_full_basis(5, 2);
    CHECK(l2.first.is_zero());
    CHECK(l2.second == b(5, 1));
    // L_4 at p = 5: b_1 + b_3 reduces to b_1 + b_2 = -1
    CycloPair l4 = embed_full_basis(5, 4);
    CHECK(l4.first.is_zero());
    CHECK(l4.second == CycloReal::constant(5, -1));
    // L_2 * L_2 = L_1 + L_3 under the graded product
    CycloPair lhs = l2 * l2;
    Vec prod(4, Int(0));
    prod[0] = 1;
    prod[2] = 1;
    CHECK(lhs == embed_full(5, prod));
    CHECK(lhs.second.is_zero());
    CHECK(lhs.first == CycloReal::constant(5, 2) + b(5, 2));
}

TEST_CASE("full embedding is multiplicative on all basis pairs") {
    for (long p : {5L, 7L, 11L, 13L}) CHECK(embedding_multiplicative(p));
}

TEST_CASE("plus embedding is a ring map on the odd subring") {
    for (long p : {5L, 7L, 11L, 13L}) {
        BasedRing plus = build_verlinde_plus(p);
        long n = plus.rank();
        for (long i = 0; i < n; ++i) {
            for (long j = i; j < n; ++j) {
                CycloReal lhs = embed_plus(p, plus.multiply(plus.basis_vector(i), plus.basis_vector(j)));
                CycloReal rhs = embed_plus_basis(p, 2 * i + 1) * embed_plus_basis(p, 2 * j + 1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("second Adams operation matches squaring under the embedding") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) CHECK(adams_embedding_commutes(p));
}

TEST_CASE("minimal polynomials of field elements") {
    // 2cos(2pi/5) satisfies t^2 + t - 1
    CHECK(min_poly_of_cyclo(b(5, 1)) == Poly::from_int_coeffs({-1, 1, 1}));
    // 2cos(2pi/7) satisfies t^3 + t^2 - 2t - 1
    CHECK(min_poly_of_cyclo(b(7, 1)) == Poly::from_int_coeffs({-1, -2, 1, 1}));
    // 1 + 2 b_1 at p = 5 is a square root of 5
    CycloReal r5 = CycloReal::one(5) + b(5, 1) * Rat(2);
    CHECK(min_poly_of_cyclo(r5) == Poly::from_int_coeffs({-5, 0, 1}));
    CHECK(r5 * r5 == CycloReal::constant(5, 5));
    // rational elements have degree-one minimal polynomials
    CHECK(min_poly_of_cyclo(CycloReal::constant(7, Rat(3, 2))) ==
          Poly({Rat(-3, 2), Rat(1)}));
    // evaluation at the element annihilates the minimal polynomial
    CycloReal x = b(11, 2) - b(11, 1);
    Poly mu = min_poly_of_cyclo(x);
    CHECK(eval_poly_at_cyclo(mu, x).is_zero());
    CHECK(mu.degree() == 5);
}

TEST_CASE("embedded simples recover the expected dimensions") {
    // fpdim of the odd simple L_3 at p = 7 solves t^3 - 2t^2 - t + 1
    CycloReal d = embed_plus_basis(7, 3);
    CHECK(eval_poly_at_cyclo(Poly::from_int_coeffs({1, -1, -2, 1}), d).is_zero());
    // fpdim of L_5 at p = 7 solves t^3 - t^2 - 2t + 1
    CycloReal d5 = embed_plus_basis(7, 5);
    CHECK(eval_poly_at_cyclo(Poly::from_int_coeffs({1, -2, -1, 1}), d5).is_zero());
}

TEST_CASE("cyclotomic input validation") {
    CHECK_THROWS_AS(CycloReal(4), InvalidInput);
    CHECK_THROWS_AS(CycloReal(3), InvalidInput);
    CHECK_THROWS_AS(b(5, 1) + b(7, 1), InvalidInput);
    CHECK_THROWS_AS(b(5, 1) * b(7, 1), InvalidInput);
    CHECK_THROWS_AS(b(5, 5), InvalidInput);
    CHECK_THROWS_AS(b(5, 1).galois_twist(10), InvalidInput);
    CHECK_THROWS_AS(embed_plus(5, Vec(3, Int(0))), InvalidInput);
    CHECK_THROWS_AS(embed_full(5, Vec(3, Int(0))), InvalidInput);
    Vec full(4, Int(0));
    full[1] = 1;
    CHECK_THROWS_AS(embed_plus_full_vec(5, full), InvalidInput);
}

TEST_CASE("cyclotomic printing") {
    CHECK(CycloReal(5).to_string() == "0");
    CHECK(CycloReal::one(5).to_string() == "1");
    CHECK((b(5, 1) * Rat(2) - b(5, 2)).to_string() == "2*(z^1+z^-1) - (z^2+z^-2)");
    CHECK((-CycloReal::one(5) - b(5, 1)).to_string() == "-1 - (z^1+z^-1)");
}
