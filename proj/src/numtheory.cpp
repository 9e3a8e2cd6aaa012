#include "ecmoment/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ecm {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for all operands below 2^64.
    u64 d = (u64)n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, (u64)n);
        if (x == 1 || x == (u64)n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, (u64)n);
            if (x == (u64)n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

i64 Factorization::value() const {
    i64 v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.push_back({p, e});
        if (n > 1 && is_prime(n)) break; // remaining cofactor is prime
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

i64 psi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p + 1);
    return r;
}

i64 phi_tilde(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r *= -(p - 1);
    return r;
}

i64 sigma(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) {
        i64 term = 1, pk = 1;
        for (int i = 0; i < e; ++i) { pk *= p; term += pk; }
        r *= term;
    }
    return r;
}

int omega(i64 n) { return (int)factorize(n).factors.size(); }

int liouville(i64 n) { return omega(n) % 2 == 0 ? 1 : -1; }

int valuation(i64 l, i64 n) {
    if (n <= 0 || !is_prime(l)) throw std::invalid_argument("valuation: need prime l, n >= 1");
    int v = 0;
    while (n % l == 0) { n /= l; ++v; }
    return v;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t base = ds.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<i64> full_divisors(i64 n) {
    auto f = factorize(n);
    std::vector<i64> out{1};
    for (auto [p, e] : f) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        size_t base = out.size();
        for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> prec_list(i64 m, i64 n1, i64 n2) {
    if (n2 <= 0 || n1 <= 0 || n1 % n2 != 0) throw std::invalid_argument("prec_list: need n2 | n1");
    if (m < 2) throw std::invalid_argument("prec_list: need m >= 2");
    i64 quot = n1 / n2;
    std::vector<i64> out{1};
    for (auto [l, e] : factorize(m)) {
        int cap = valuation(l, quot) - 1;
        if (cap < 1) return {};
        std::vector<i64> next;
        next.reserve(out.size() * cap);
        i64 le = 1;
        for (int a = 1; a <= cap; ++a) {
            le *= l;
            for (i64 v : out) next.push_back(v * le);
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm_ll(i64 a, i64 b) { return std::lcm(a, b); }

i64 mod_reduce(i64 a, i64 n) {
    if (n <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 mod_inverse(i64 a, i64 n) {
    if (n <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (n == 1) return 0;
    i64 r0 = n, r1 = mod_reduce(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: argument is not a unit");
    return mod_reduce(s0, n);
}

bool crt_pair_solvable(i64 a1, i64 m1, i64 a2, i64 m2) {
    i64 g = std::gcd(m1, m2);
    return mod_reduce(a1 - a2, g) == 0;
}

std::pair<i64, i64> crt_pair(i64 a1, i64 m1, i64 a2, i64 m2) {
    if (m1 <= 0 || m2 <= 0) throw std::invalid_argument("crt_pair: moduli must be positive");
    i64 g = std::gcd(m1, m2);
    i64 diff = a2 - a1;
    if (mod_reduce(diff, g) != 0) throw std::domain_error("crt_pair: incompatible congruences");
    i64 l = m1 / g * m2;
    // x = a1 + m1*t, (m1/g) t = diff/g (mod m2/g); m1/g and m2/g are coprime.
    i64 m2g = m2 / g;
    i64 t = m2g == 1 ? 0 : mod_reduce(diff / g, m2g) * mod_inverse(mod_reduce(m1 / g, m2g), m2g) % m2g;
    i64 x = mod_reduce(a1 + m1 * t, l);
    return {x, l};
}

std::pair<i64, i64> crt_combine(const std::vector<std::pair<i64, i64>>& residues) {
    i64 x = 0, m = 1;
    for (auto [a, n] : residues) {
        if (n <= 0) throw std::invalid_argument("crt_combine: moduli must be positive");
        if (std::gcd(m, n) != 1) throw std::domain_error("crt_combine: moduli not pairwise coprime");
        auto [y, l] = crt_pair(x, m, a, n);
        x = y; m = l;
    }
    return {x, m};
}

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

i64 isqrt_ll(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt_ll: negative argument");
    i64 r = (i64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt_ll(n);
    return r * r == n;
}

} // namespace ecm
