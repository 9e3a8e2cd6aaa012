#pragma once

#include "ecmoment/hecke.hpp"
#include "ecmoment/rational.hpp"

#include <cstdint>

namespace ecm {

// H_{n1,n2}(t,q,d):
//   (1/2) H((t^2-4q)/n2^2) d_{n2}(d^2 q, 1) D(t; n1 n2)
//   + sum_{m || n1, m >= 2} sum_{mu < m} lambda(m) (1/2) H((t^2-4q)/(n2 mu)^2)
//       d_{n2 mu}(d^2 q, 1) D_{n1,mu}(t),
// the inner relation mu < m taken with respect to (n1, n2).  Each delta is
// evaluated before its D factor; a failed delta kills the term with no lift
// attempted (the lift value is only well defined past modulus n1 n2 when
// d^2 q = 1 at the matching n2 mu level).  Non-integral Hurwitz arguments
// vanish through the 0-extension.  Requires t^2 < 4q.
Rat class_number_sum(const CongParams& cp, std::int64_t t);

// Same sum evaluated directly at level (p^r n1, n2) with d a unit mod
// p^r n1; the factorization H_{p^r n1, n2} = D(t; p^r) H_{n1, n2} is a
// tested invariant, not the evaluation route.  Requires r >= 1 and
// gcd(q, n1) = 1.
Rat class_number_sum_p_level(std::int64_t p, int r, std::int64_t n1, std::int64_t n2,
                             std::int64_t q, std::int64_t d, std::int64_t t);

} // namespace ecm
