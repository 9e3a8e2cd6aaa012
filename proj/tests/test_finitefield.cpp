#include "doctest.h"

#include "ecmoment/finitefield.hpp"
#include "ecmoment/numtheory.hpp"

#include <set>

using namespace ecm;

TEST_CASE("deterministic moduli") {
    CHECK(FieldCtx::make(2, 1)->modulus() == std::vector<int>{0, 1});
    CHECK(FieldCtx::make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(FieldCtx::make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    CHECK_THROWS(FieldCtx::make(4, 1));
}

TEST_CASE("extension arithmetic spot checks") {
    auto f4 = FieldCtx::make(2, 2);
    FieldElem x = f4->from_coefficients({0, 1});
    CHECK(x * x == f4->from_coefficients({1, 1})); // x^2 = x + 1
    auto f9 = FieldCtx::make(3, 2);
    FieldElem y = f9->from_coefficients({0, 1});
    CHECK(y * y == f9->from_integer(-1)); // x^2 = -1 = 2
    CHECK(f9->one().inverse() == f9->one());
    CHECK_THROWS(f9->zero().inverse());
}

TEST_CASE("field axioms on every desk-scale context") {
    for (i64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
        auto ctx = FieldCtx::for_prime_power(q);
        auto elems = ctx->enumerate();
        REQUIRE((i64)elems.size() == q);
        CHECK(elems[0].is_zero());
        std::set<std::uint32_t> distinct;
        for (auto e : elems) distinct.insert(e.index());
        CHECK((i64)distinct.size() == q);

        for (auto a : elems) {
            CHECK(a.pow(q) == a); // Frobenius fixes F_q
            if (!a.is_zero()) CHECK(a.inverse() * a == ctx->one());
        }
        // multiplicative group is cyclic: some element has order q-1
        bool has_generator = false;
        for (auto a : elems) {
            if (a.is_zero()) continue;
            i64 ord = 1;
            FieldElem acc = a;
            while (acc != ctx->one()) { acc = acc * a; ++ord; }
            if (ord == q - 1) { has_generator = true; break; }
        }
        CHECK(has_generator);

        // commutativity + distributivity spot pass
        for (auto a : elems)
            for (auto b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a * (b + ctx->one()) == a * b + a);
            }
    }
}
