#include "doctest.h"

#include "ecmoment/classsum.hpp"
#include "ecmoment/numtheory.hpp"
#include "ecmoment/quadforms.hpp"

#include <numeric>

using namespace ecm;

TEST_CASE("level (1,1) reduces to half the Hurwitz value") {
    for (i64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        CongParams cp(1, 1, q, 0);
        for (i64 t = -isqrt_ll(4 * q - 1); t * t < 4 * q; ++t)
            CHECK(class_number_sum(cp, t) == make_rat(1, 2) * hurwitz_class_number(t * t - 4 * q));
    }
}

TEST_CASE("worked example H_{2,1}(+-1, 2, 1)") {
    CongParams cp(2, 1, 2, 1);
    CHECK(class_number_sum(cp, 1) == make_rat(1, 2));
    CHECK(class_number_sum(cp, -1) == make_rat(1, 2));
    CHECK(class_number_sum(cp, 0) == 0); // D(0;2) = 0 at q = 2
    CHECK_THROWS(class_number_sum(cp, 3));
}

TEST_CASE("p-level evaluation") {
    CHECK(class_number_sum_p_level(2, 1, 1, 1, 2, 1, 1) == make_rat(1, 2));
    CHECK_THROWS(class_number_sum_p_level(2, 0, 1, 1, 2, 1, 1));
    CHECK_THROWS(class_number_sum_p_level(2, 1, 2, 1, 2, 1, 1)); // gcd(q, n1) != 1

    // p | t forces vanishing at every p-level
    for (i64 q : {2, 3, 4, 8, 9}) {
        i64 p = factorize(q).factors[0].prime;
        for (int r : {1, 2})
            for (i64 n1 = 1; n1 <= 4; ++n1) {
                if (std::gcd(n1, q) != 1) continue;
                for (i64 d = 1; d <= ipow(p, r) * n1; ++d) {
                    if (std::gcd(d, ipow(p, r) * n1) != 1) continue;
                    for (i64 t = -isqrt_ll(4 * q - 1); t * t < 4 * q; ++t)
                        if (t % p == 0)
                            CHECK(class_number_sum_p_level(p, r, n1, 1, q, d, t) == 0);
                }
            }
    }
}

TEST_CASE("reflection in d") {
    for (i64 q : {2, 3, 4, 5}) {
        for (i64 n1 = 1; n1 <= 6; ++n1) {
            for (i64 n2 : divisors(n1)) {
                for (i64 d = 0; d < std::max<i64>(n1, 1); ++d) {
                    if (n1 > 1 && std::gcd(d, n1) != 1) continue;
                    if (mod_reduce(d * d * q - 1, n2) != 0) continue;
                    CongParams plus(n1, n2, q, d);
                    CongParams minus(n1, n2, q, mod_reduce(-d, n1));
                    for (i64 t = -isqrt_ll(4 * q - 1); t * t < 4 * q; ++t)
                        CHECK(class_number_sum(minus, t) == class_number_sum(plus, -t));
                }
            }
        }
    }
}
