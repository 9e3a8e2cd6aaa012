#include "doctest.h"

#include "ecmoment/chebyshev.hpp"
#include "ecmoment/numtheory.hpp"

#include <cmath>

using namespace ecm;

TEST_CASE("base cases") {
    for (i64 t : {-3, 0, 2, 7}) {
        for (i64 q : {1, 2, 9}) {
            CHECK(cheb_u_norm(t, q, 0) == 1);
            CHECK(cheb_u_norm(t, q, 1) == t);
            CHECK(cheb_u_norm(t, q, 2) == t * t - q);
        }
    }
    CHECK(cheb_u_norm(1, 2, 10) == 23);
}

TEST_CASE("parity in t") {
    for (i64 t = -20; t <= 20; ++t)
        for (i64 q = 1; q <= 32; ++q)
            for (int j = 0; j <= 20; ++j) {
                Int lhs = cheb_u_norm(-t, q, j);
                Int rhs = cheb_u_norm(t, q, j);
                if (j % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("specialization q=1, t=2") {
    for (int j = 0; j <= 30; ++j) CHECK(cheb_u_norm(2, 1, j) == j + 1);
}

TEST_CASE("floating-point cross-check inside the Hasse range") {
    for (i64 q : {2, 3, 4, 5, 7, 9, 16, 25}) {
        for (i64 t = -isqrt_ll(4 * q - 1); t * t < 4 * q; ++t) {
            double theta = std::acos((double)t / (2.0 * std::sqrt((double)q)));
            for (int j = 0; j <= 20; ++j) {
                double expected = std::pow((double)q, j / 2.0) *
                                  std::sin((j + 1) * theta) / std::sin(theta);
                double got = (double)cheb_u_norm(t, q, j);
                // relative to the value scale (j+1) q^{j/2}; the trig route
                // cancels catastrophically near its zeros
                double scale = std::max(1.0, (j + 1) * std::pow((double)q, j / 2.0));
                CHECK(std::abs(got - expected) <= 1e-9 * scale);
            }
        }
    }
}
