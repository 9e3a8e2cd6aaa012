#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ecm {

using i64 = std::int64_t;

struct PrimePower {
    i64 prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

// Prime factorization, primes strictly increasing, exponents >= 1.
struct Factorization {
    std::vector<PrimePower> factors;

    i64 value() const;
    auto begin() const { return factors.begin(); }
    auto end() const { return factors.end(); }
    bool operator==(const Factorization&) const = default;
};

bool is_prime(i64 n);
Factorization factorize(i64 n); // rejects n <= 0

i64 euler_phi(i64 n);
i64 psi(i64 n);       // n * prod_{l|n} (1 + 1/l)
i64 phi_tilde(i64 n); // n * prod_{l|n} (-(l-1)); Dirichlet inverse of phi(n^2)
i64 sigma(i64 n);     // sum of divisors
int liouville(i64 n); // (-1)^omega(n): sign from the number of DISTINCT primes
int omega(i64 n);
int valuation(i64 l, i64 n); // l prime, n >= 1
i64 radical(i64 n);

std::vector<i64> divisors(i64 n); // ascending

// Divisors nu with v_l(nu) = v_l(n) for every prime l | nu, ascending.
std::vector<i64> full_divisors(i64 n);

// All mu with rad(mu) = rad(m) and 1 <= v_l(mu) <= v_l(n1/n2) - 1 per prime
// l | m, ascending; empty when any prime of m has no admissible exponent.
// Requires n2 | n1 and m >= 2.
std::vector<i64> prec_list(i64 m, i64 n1, i64 n2);

// Chinese remainder for pairwise-coprime moduli; rejects non-coprime input.
// Returns (value, product of moduli).
std::pair<i64, i64> crt_combine(const std::vector<std::pair<i64, i64>>& residues);

// General two-congruence CRT: x = a1 (mod m1), x = a2 (mod m2).
// Returns (x, lcm(m1,m2)); solvable iff gcd(m1,m2) | a1-a2, else throws.
bool crt_pair_solvable(i64 a1, i64 m1, i64 a2, i64 m2);
std::pair<i64, i64> crt_pair(i64 a1, i64 m1, i64 a2, i64 m2);

i64 mod_inverse(i64 a, i64 n); // a unit mod n; result in [0, n)
i64 mod_reduce(i64 a, i64 n);  // representative in [0, n)
i64 gcd_ll(i64 a, i64 b);
i64 lcm_ll(i64 a, i64 b);
i64 ipow(i64 base, int exp);

// floor(sqrt(n)) for n >= 0, and exactness test.
i64 isqrt_ll(i64 n);
bool is_perfect_square(i64 n);

} // namespace ecm
