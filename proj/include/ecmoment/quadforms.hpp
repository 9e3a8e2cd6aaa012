#pragma once

#include "ecmoment/rational.hpp"

#include <cstdint>
#include <vector>

namespace ecm {

// Positive-definite reduced binary quadratic form a x^2 + b xy + c y^2:
// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a,b,c) = 1.
struct ReducedForm {
    std::int64_t a, b, c;
    bool operator==(const ReducedForm&) const = default;
};

// All primitive reduced forms of discriminant D (D < 0, D = 0,1 mod 4).
std::vector<ReducedForm> reduced_forms(std::int64_t D);

// h(D): count of primitive reduced forms; rejects D >= 0 or D = 2,3 mod 4.
std::int64_t class_number(std::int64_t D);

// h_w(D): h(D)/3 at D = -3, h(D)/2 at D = -4, h(D) otherwise;
// 0 for D = 2,3 mod 4.  Rejects D >= 0.
Rat weighted_class_number(std::int64_t D);

// Hurwitz-Kronecker class number H(Delta) = sum_{f^2 | Delta} h_w(Delta/f^2),
// extended by 0 to every argument that is not a negative integer congruent
// to 0 or 1 mod 4 (non-integral rationals included).  Memoized.
Rat hurwitz_class_number(const Rat& delta);
Rat hurwitz_class_number(std::int64_t delta);

} // namespace ecm
