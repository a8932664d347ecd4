#include "doctest.h"

#include "kring/matrix.hpp"

using namespace kring;

static Mat mat(int r, int c, std::vector<long> vals) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rat(vals[i * c + j]);
    return m;
}

static IMat imat(int r, int c, std::vector<long> vals) {
    IMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Int(vals[i * c + j]);
    return m;
}

TEST_CASE("rref rank and kernel") {
    // Columns are the images of the simples of the second Adams operation
    // on the rank-4 fusion ring at p = 5: L1, -L1+L3, L1-L3, -L1.
    Mat m = mat(4, 4, {1, -1, 1, -1,
                       0, 0, 0, 0,
                       0, 1, -1, 0,
                       0, 0, 0, 0});
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == std::vector<Int>{0, 1, 1, 0});
    CHECK(ker[1] == std::vector<Int>{1, 0, 0, 1});

    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.size() == 2);
}

TEST_CASE("kernel vectors are primitive integer") {
    Mat m(1, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(0, 2) = Rat(0);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == std::vector<Int>{2, -3, 0});
    CHECK(ker[1] == std::vector<Int>{0, 0, 1});
}

TEST_CASE("solve and inverse") {
    Mat a = mat(2, 2, {2, 1, 1, 3});
    auto x = a.solve({Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));

    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv) * a == Mat::identity(2));

    Mat s = mat(2, 2, {1, 2, 2, 4});
    CHECK(!s.inverse().has_value());
    CHECK(!s.solve({Rat(1), Rat(0)}).has_value());
}

TEST_CASE("char_poly") {
    CHECK(char_poly(mat(2, 2, {2, 1, 1, 2})) == Poly::from_int_coeffs({3, -4, 1}));
    CHECK(char_poly(Mat::identity(3)) == Poly::from_int_coeffs({-1, 3, -3, 1}));
    // Companion matrix of t^3 - 2t^2 - t + 1.
    Mat c = mat(3, 3, {0, 0, -1, 1, 0, 1, 0, 1, 2});
    CHECK(char_poly(c) == Poly::from_int_coeffs({1, -1, -2, 1}));
}

TEST_CASE("integer matrix det") {
    CHECK(imat(2, 2, {1, 2, 3, 4}).det() == Int(-2));
    CHECK(imat(2, 2, {1, 2, 2, 4}).det() == Int(0));
    CHECK(imat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}).det() == Int(-1));
    CHECK(imat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}).det() == Int(30));
    CHECK(IMat::identity(4).det() == Int(1));
}

TEST_CASE("integer matrix power and apply") {
    IMat u = imat(2, 2, {1, 1, 0, 1});
    IMat u5 = imat_pow(u, 5);
    CHECK(u5.at(0, 1) == Int(5));
    CHECK(imat_pow(u, 0) == IMat::identity(2));
    CHECK(u.apply({Int(2), Int(3)}) == std::vector<Int>{5, 3});
}

TEST_CASE("primitive integer vector") {
    std::vector<Rat> v{Rat(-1, 2), Rat(1, 3), Rat(0)};
    CHECK(primitive_integer_vector(v) == std::vector<Int>{3, -2, 0});
    std::vector<Rat> z{Rat(0), Rat(0)};
    CHECK(primitive_integer_vector(z) == std::vector<Int>{0, 0});
}
