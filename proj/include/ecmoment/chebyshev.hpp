#pragma once

#include "ecmoment/rational.hpp"

#include <cstdint>

namespace ecm {

// Integer-normalized Chebyshev value of the second kind:
//   V_0 = 1, V_1 = t, V_j = t*V_{j-1} - q*V_{j-2},
// algebraically equal to q^{j/2} U_j(t / (2 sqrt(q))).  The two-term integer
// recurrence keeps everything exact; no irrational intermediates.
Int cheb_u_norm(std::int64_t t, std::int64_t q, int j);

} // namespace ecm
