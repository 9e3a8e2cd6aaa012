#include "doctest.h"

#include "ecmoment/oracles.hpp"

using namespace ecm;

TEST_CASE("series arithmetic") {
    QSeries a = series_make({Int(1), Int(1)}, 4);
    QSeries b = series_make({Int(1), Int(-1)}, 4);
    QSeries p = series_mul(a, b, 4);
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(2) == -1);
    CHECK(p.coefficient(3) == 0);

    // prod_{n<=3} (1 - x^n) to precision 3: 1 - x - x^2 + 0 x^3
    QSeries prod = series_make({Int(1)}, 3);
    for (int n = 1; n <= 3; ++n) {
        std::vector<Int> f((size_t)n + 1);
        f[0] = 1;
        f[(size_t)n] = -1;
        prod = series_mul(prod, series_make(std::move(f), 3), 3);
    }
    CHECK(prod.coefficient(0) == 1);
    CHECK(prod.coefficient(1) == -1);
    CHECK(prod.coefficient(2) == -1);
    CHECK(prod.coefficient(3) == 0);
}

TEST_CASE("discriminant cusp form coefficients") {
    QSeries d = delta_series(13);
    CHECK(d.coefficient(0) == 0);
    CHECK(d.coefficient(1) == 1);
    CHECK(d.coefficient(2) == -24);
    CHECK(d.coefficient(4) == -1472);
    CHECK(d.coefficient(6) == d.coefficient(2) * d.coefficient(3));
}

TEST_CASE("eisenstein series") {
    QSeries e4 = eisenstein(4, 5);
    CHECK(e4.coefficient(0) == 1);
    CHECK(e4.coefficient(1) == 240);
    CHECK(e4.coefficient(2) == 240 * 9); // sigma_3(2) = 9
    QSeries e6 = eisenstein(6, 5);
    CHECK(e6.coefficient(1) == -504);
    CHECK(e6.coefficient(2) == -504 * 33); // sigma_5(2) = 33
    CHECK_THROWS(eisenstein(8, 5));
}

TEST_CASE("level-1 cusp bases") {
    CHECK(level1_cusp_basis(10, 5).empty());
    CHECK(level1_cusp_basis(14, 5).empty());
    auto b12 = level1_cusp_basis(12, 5);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0].coefficient(2) == -24);
    auto b16 = level1_cusp_basis(16, 5);
    REQUIRE(b16.size() == 1);
    CHECK(b16[0].coefficient(1) == 1);
    CHECK(b16[0].coefficient(2) == 216); // -24 + 240
    CHECK_THROWS(level1_cusp_basis(24, 5));
    CHECK_THROWS(level1_cusp_basis(13, 5));
    CHECK_THROWS(level1_cusp_basis(28, 5));
}

TEST_CASE("hecke recursion and multiplicativity per weight") {
    for (int k : {12, 16, 18, 20, 22, 26}) {
        auto basis = level1_cusp_basis(k, 25);
        REQUIRE(basis.size() == 1);
        const QSeries& f = basis[0];
        CHECK(f.coefficient(1) == 1);
        for (int p : {2, 3, 5}) {
            Int pk = 1;
            for (int i = 0; i < k - 1; ++i) pk *= p;
            CHECK(f.coefficient(p * p) == f.coefficient(p) * f.coefficient(p) - pk);
        }
        CHECK(f.coefficient(6) == f.coefficient(2) * f.coefficient(3));
    }
}
