#pragma once

#include "ecmoment/rational.hpp"

#include <cstdint>
#include <vector>

namespace ecm {

// Congruence data (n1, n2, q, d): n2 | n1, d a unit mod n1.  The class-sum
// and trace-formula callers also guarantee d^2 q = 1 (mod n2); the delta
// factors below re-check it where the formulas demand it.
struct CongParams {
    std::int64_t n1, n2, q, d;
    CongParams(std::int64_t n1, std::int64_t n2, std::int64_t q, std::int64_t d);
};

// Indicator d_c(a, b): a = b (mod c).
int delta_mod(std::int64_t a, std::int64_t b, std::int64_t c);

// The common value (d~ q + d~^{-1}) mod n over unit lifts d~ of d.  The
// canonical lift takes d's residue at primes of n1 and residue 1 at any
// other prime of n; lift-independence is a library invariant asserted by
// exhaustive-scan tests, not assumed here.
std::int64_t lift_value(const CongParams& cp, std::int64_t n);

// D(t; n): 1 iff lift_value = t (mod n).
int trace_match(const CongParams& cp, std::int64_t t, std::int64_t n);

// D_{nu,mu}(t): over primes l | nu, exact-valuation window factors
// D(t; l^{v-1}) - D(t; l^v) with v = v_l(n1 n2 mu) where l | mu, plain
// factors D(t; l^{v_l(n1 n2)}) where l does not divide mu.  Value is 0 or 1.
int trace_match_profile(const CongParams& cp, std::int64_t nu, std::int64_t mu, std::int64_t t);

// S(N, m, t, q): units c mod N admitting a unit lift c~ mod N(N,m) with
// c~^2 - t c~ + q = 0 (mod N(N,m)).  Exhaustive scan, memoized, ascending.
std::vector<std::int64_t> frobenius_roots(std::int64_t N, std::int64_t m, std::int64_t t, std::int64_t q);

// W_{N,M,m}(d): elements of S(MN, m, t, q) that reduce to d^{-1} mod N.
std::int64_t matched_root_count(std::int64_t N, std::int64_t M, std::int64_t m,
                                std::int64_t d, std::int64_t t, std::int64_t q);

// C_{N,M}(t,q,d): sum over m^2 | t^2-4q of
//   h_w((t^2-4q)/m^2) * psi(MN)/psi(MN/(MN,m)) * W_{N,M,m}(d).
// Requires t^2 < 4q and M | N.
Rat root_class_sum(std::int64_t N, std::int64_t M, std::int64_t t, std::int64_t q, std::int64_t d);

} // namespace ecm
