#include "doctest.h"

#include "ecmoment/hecke.hpp"
#include "ecmoment/numtheory.hpp"
#include "ecmoment/quadforms.hpp"

#include <numeric>

using namespace ecm;

TEST_CASE("lift_value") {
    CHECK(lift_value(CongParams(1, 1, 2, 0), 2) == 1); // q + 1 mod 2
    CHECK(lift_value(CongParams(4, 2, 9, 1), 8) == 2); // every lift of 1 gives 2 mod 8
    for (i64 q : {2, 3, 4, 5, 8, 9})
        for (i64 n = 1; n <= 20; ++n)
            CHECK(lift_value(CongParams(1, 1, q, 0), n) == mod_reduce(q + 1, n));
    CHECK_THROWS(CongParams(4, 2, 9, 2)); // d not a unit
    CHECK_THROWS(CongParams(4, 3, 9, 1)); // n2 does not divide n1
}

TEST_CASE("trace indicator") {
    CongParams cp(1, 1, 2, 0);
    CHECK(trace_match(cp, 1, 2) == 1); // 2 | q+1-t = 2
    CHECK(trace_match(cp, 0, 2) == 0);
    for (i64 q : {2, 3, 5, 9}) {
        CongParams c1(6, 1, q, 1);
        for (i64 t = -5; t <= 5; ++t)
            for (i64 n : divisors(6))
                CHECK(trace_match(c1, t, n) == (mod_reduce(q + 1 - t, n) == 0 ? 1 : 0));
    }
    // n = 1 always matches
    CHECK(trace_match(CongParams(5, 1, 3, 2), 77, 1) == 1);
}

TEST_CASE("monotonicity of the indicator under divisors") {
    for (i64 n1 : {4, 6, 12}) {
        for (i64 n2 : divisors(n1)) {
            for (i64 q : {2, 3, 5, 7}) {
                for (i64 d = 1; d < n1; ++d) {
                    if (std::gcd(d, n1) != 1) continue;
                    if (mod_reduce(d * d * q - 1, n2) != 0) continue;
                    CongParams cp(n1, n2, q, d);
                    for (i64 t = -4; t <= 4; ++t)
                        for (i64 n : divisors(n1 * n2))
                            if (trace_match(cp, t, n) == 1)
                                for (i64 np : divisors(n))
                                    CHECK(trace_match(cp, t, np) == 1);
                }
            }
        }
    }
}

TEST_CASE("profile indicator") {
    CHECK(trace_match_profile(CongParams(4, 2, 9, 1), 1, 1, 3) == 1); // empty product
    CongParams cp(2, 1, 5, 1);
    CHECK(trace_match_profile(cp, 2, 1, 2) == 1); // D(2;2), q+1-t = 4
    // d=1, single prime in mu: the factor fires iff v_2(q+1-t) = v_2(n1 n2 mu) - 1
    CongParams c8(8, 2, 5, 1);
    for (i64 t = -4; t <= 4; ++t) {
        i64 w = 5 + 1 - t; // in [2, 10], so the exact valuation 4 never occurs
        int expect = (w % 16 == 0 && w % 32 != 0) ? 1 : 0;
        CHECK(trace_match_profile(c8, 8, 2, t) == expect);
        CHECK(trace_match_profile(c8, 8, 2, t) == 0);
    }
    // same window where it can fire: n1=4, n2=1, mu=2, v_2(8)=3, need v_2(q+1-t)=2
    CongParams c4(4, 1, 3, 1);
    for (i64 t = -3; t <= 3; ++t) {
        i64 w = 3 + 1 - t;
        int expect = (w % 4 == 0 && w % 8 != 0) ? 1 : 0;
        CHECK(trace_match_profile(c4, 4, 2, t) == expect);
    }
}

TEST_CASE("frobenius root sets") {
    CHECK(frobenius_roots(1, 1, 0, 2) == std::vector<i64>{0});
    // p^r with p | t: empty
    for (i64 q : {2, 3, 4, 8, 9}) {
        i64 p = factorize(q).factors[0].prime;
        for (int r = 1; ipow(p, r) <= 16; ++r)
            for (i64 t = -isqrt_ll(4 * q - 1); t * t < 4 * q; ++t)
                if (t % p == 0) CHECK(frobenius_roots(ipow(p, r), 1, t, q).empty());
    }
    // q = 4, N = 4, t = 1: unique root c = t = 1
    CHECK(frobenius_roots(4, 1, 1, 4) == std::vector<i64>{1});
}

TEST_CASE("matched root counts") {
    // W_{1,1,m} = 1
    for (i64 m : {1, 2, 3}) CHECK(matched_root_count(1, 1, m, 0, 1, 2) == 1);
}

TEST_CASE("root class sum base case") {
    CHECK(root_class_sum(1, 1, 1, 2, 0) == Rat(1)); // h_w(-7) = 1
    CHECK_THROWS(root_class_sum(1, 1, 3, 2, 0));    // t^2 >= 4q
    // psi-ratio weights: N=M=1, q=4, t=0: delta = -16, m in {1,2}
    Rat expect = weighted_class_number(-16) + weighted_class_number(-4);
    CHECK(root_class_sum(1, 1, 0, 4, 0) == expect);
}
