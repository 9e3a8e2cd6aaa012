#include "doctest.h"

#include "ecmoment/curves.hpp"
#include "ecmoment/numtheory.hpp"
#include "ecmoment/traceformula.hpp"

#include <numeric>

using namespace ecm;

TEST_CASE("dual term") {
    CHECK(trace_dual_term(TraceParams(1, 1, 4, 1, 2)) == Rat(7));
    CHECK(trace_dual_term(TraceParams(1, 1, 2, 1, 12)) == Rat(0));
    CHECK(trace_dual_term(TraceParams(1, 1, 2, 1, 2)) == Rat(3));
}

TEST_CASE("identity term") {
    CHECK(trace_identity_term(TraceParams(1, 1, 2, 1, 12)) == Rat(0)); // q not a square
    CHECK(trace_identity_term(TraceParams(1, 1, 4, 1, 12)) == make_rat(11, 24) * Rat(1024) * Rat(2));
}

TEST_CASE("level-1 elliptic term and full trace at q=2, k=12") {
    TraceParams tp(1, 1, 2, 1, 12);
    CHECK(trace_elliptic_term(tp) == Rat(23));
    CHECK(trace_hyperbolic_term(tp) == Rat(1));
    CHECK(hecke_trace(tp) == Rat(-24));
    CHECK(hecke_trace(TraceParams(1, 1, 4, 1, 12)) == Rat(-1472));
    CHECK(hecke_trace(TraceParams(1, 1, 2, 1, 4)) == Rat(0));
}

TEST_CASE("elliptic term agrees across both assembly routes") {
    for (i64 q : {2, 3, 5}) {
        i64 p = factorize(q).factors[0].prime;
        for (int r : {0, 1}) {
            i64 pr = ipow(p, r);
            for (i64 N = 1; N <= 6; ++N) {
                if (std::gcd(N, q) != 1) continue;
                for (i64 M : divisors(N)) {
                    for (i64 d = 0; d < std::max<i64>(pr * N, 1); ++d) {
                        if (pr * N > 1 && std::gcd(d, pr * N) != 1) continue;
                        if (pr * N == 1 && d != 0) continue;
                        if (mod_reduce(d * d * q - 1, M) != 0) continue;
                        for (int k : {2, 3, 12}) {
                            TraceParams tp(N, M, q, d, k, r);
                            CHECK(trace_elliptic_term(tp) == trace_elliptic_term_via_roots(tp));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("normalized elliptic sum: explicit display vs scaled T_ell") {
    for (i64 q : {2, 3, 4, 5}) {
        i64 p = factorize(q).factors[0].prime;
        for (int r : {0, 1, 2}) {
            i64 level = ipow(p, r);
            for (i64 n1 = 1; n1 <= 6; ++n1) {
                if (std::gcd(n1, q) != 1) continue;
                i64 full = level * n1;
                for (i64 d = 0; d < std::max<i64>(full, 1); ++d) {
                    if (full > 1 && std::gcd(d, full) != 1) continue;
                    if (full == 1 && d != 0) continue;
                    i64 L = std::gcd(d * d * q - 1, n1);
                    for (i64 lambda : divisors(L)) {
                        for (int k : {2, 12}) {
                            Rat lhs = normalized_elliptic_sum(p, r, n1, lambda, q, d, k);
                            TraceParams tp(n1, lambda, q, d, k, r);
                            Rat scale = make_rat(psi(full * full / (lambda * lambda)), psi(full * full)) *
                                        make_rat(euler_phi(full / lambda), euler_phi(full));
                            CHECK(lhs == scale * trace_elliptic_term(tp));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("worked normalized sum T_{2,1}(2,1) at k=12") {
    CHECK(normalized_elliptic_sum(2, 1, 1, 1, 2, 1, 12) == Rat(23));
    CHECK_THROWS(normalized_elliptic_sum(2, 1, 3, 2, 4, 1, 12)); // lambda does not divide gcd(q-1, n1)
}

TEST_CASE("trace-side moment examples") {
    AbelianSpec z2 = AbelianSpec::make(2, 1, 2);
    CHECK(trace_side_moment(z2, 2, 12) == make_rat(23, 2));
    AbelianSpec a = AbelianSpec::make(15, 3, 5);
    CHECK(trace_side_moment(a, 5, 4) == Rat(0)); // q != 1 mod n2
    CHECK_THROWS(trace_side_moment(AbelianSpec::make(3, 1, 5), 5, 4)); // r = 0
    CHECK_THROWS(trace_side_moment(AbelianSpec::make(4, 2, 2), 2, 4)); // p | n2
}

TEST_CASE("weight parity at tiny levels") {
    for (int k : {3, 5, 7}) {
        CHECK(hecke_trace(TraceParams(1, 1, 2, 1, k, 0)) == Rat(0));
        CHECK(hecke_trace(TraceParams(2, 1, 3, 1, k, 0)) == Rat(0));
        CHECK(hecke_trace(TraceParams(1, 1, 2, 1, k, 1)) == Rat(0)); // level 2 = p^1
    }
}

TEST_CASE("collapse identity, d = 1 slice") {
    for (i64 q : {2, 3, 4}) {
        i64 p = factorize(q).factors[0].prime;
        for (i64 n1 = 1; n1 <= 4; ++n1) {
            if (std::gcd(n1, q) != 1) continue;
            for (i64 n2 : divisors(n1)) {
                if (mod_reduce(q - 1, n2) != 0) continue;
                CHECK(collapse_identity_holds(p, 1, n1, n2, q, 1, 12));
            }
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(TraceParams(2, 1, 2, 1, 12, 0)); // gcd(N, q) != 1
    CHECK_THROWS(TraceParams(4, 4, 7, 1, 12));    // d^2 q != 1 mod M
    CHECK_THROWS(TraceParams(3, 2, 5, 1, 12));    // M does not divide N
    CHECK_THROWS(TraceParams(1, 1, 12, 1, 12));   // q not a prime power
    CHECK_THROWS(TraceParams(1, 1, 4, 1, 1));     // k < 2
}
