#include "ecmoment/traceformula.hpp"

#include "ecmoment/chebyshev.hpp"
#include "ecmoment/classsum.hpp"
#include "ecmoment/hecke.hpp"
#include "ecmoment/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace ecm {

TraceParams::TraceParams(std::int64_t N_, std::int64_t M_, std::int64_t q_, std::int64_t d_, int k_, int r_)
    : N(N_), M(M_), q(q_), d(d_), k(k_), r(r_) {
    if (N < 1 || M < 1 || N % M != 0) throw std::invalid_argument("TraceParams: need M | N");
    if (k < 2) throw std::invalid_argument("TraceParams: need k >= 2");
    if (r < 0) throw std::invalid_argument("TraceParams: need r >= 0");
    auto f = factorize(q);
    if (f.factors.size() != 1) throw std::invalid_argument("TraceParams: q must be a prime power");
    p_ = f.factors[0].prime;
    if (std::gcd(N, q) != 1) throw std::invalid_argument("TraceParams: need gcd(N, q) = 1");
    level_ = ipow(p_, r) * N;
    d = mod_reduce(d, level_);
    if (std::gcd(d, level_) != 1 && level_ > 1)
        throw std::invalid_argument("TraceParams: d must be a unit mod p^r N");
    if (mod_reduce(d * d * q - 1, M) != 0)
        throw std::invalid_argument("TraceParams: need d^2 q = 1 (mod M)");
}

Rat trace_identity_term(const TraceParams& tp) {
    if (!is_perfect_square(tp.q)) return Rat(0);
    std::int64_t s = isqrt_ll(tp.q);
    std::int64_t l = tp.level();
    int deltas = delta_mod(s * tp.d, 1, l) + (tp.k % 2 == 0 ? 1 : -1) * delta_mod(s * tp.d, -1, l);
    if (deltas == 0) return Rat(0);
    Int qpow = 1;
    for (int i = 0; i < tp.k - 2; ++i) qpow *= s;
    return Rat(euler_phi(l)) * make_rat(tp.k - 1, 24) * Rat(qpow) * Rat(psi(l * tp.M)) * Rat(deltas);
}

Rat trace_elliptic_term(const TraceParams& tp) {
    std::int64_t l = tp.level();
    std::int64_t L = std::gcd(tp.d * tp.d * tp.q - 1, tp.N);
    Rat outer = Rat(euler_phi(l)) * make_rat(psi(l * l), psi(l * l / (tp.M * tp.M)));
    std::int64_t tmax = isqrt_ll(4 * tp.q - 1);

    Rat sum(0);
    for (std::int64_t Lam : divisors(L / tp.M)) {
        Rat coef = Rat(euler_phi(Lam * Lam)) * make_rat(euler_phi(l / (tp.M * Lam)), euler_phi(l / tp.M));
        CongParams cp(l, Lam * tp.M, tp.q, tp.d);
        Rat inner(0);
        for (std::int64_t t = -tmax; t <= tmax; ++t) {
            Rat h = class_number_sum(cp, t);
            if (h == 0) continue;
            inner += Rat(cheb_u_norm(t, tp.q, tp.k - 2)) * h;
        }
        sum += coef * inner;
    }
    return outer * sum;
}

Rat trace_elliptic_term_via_roots(const TraceParams& tp) {
    std::int64_t l = tp.level();
    std::int64_t tmax = isqrt_ll(4 * tp.q - 1);
    int sign = tp.k % 2 == 0 ? 1 : -1;
    Rat sum(0);
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        Rat c_plus = root_class_sum(l, tp.M, t, tp.q, tp.d);
        Rat c_minus = root_class_sum(l, tp.M, t, tp.q, mod_reduce(-tp.d, std::max<std::int64_t>(l, 1)));
        Rat sym = (c_plus + Rat(sign) * c_minus) * make_rat(1, 2);
        if (sym == 0) continue;
        sum += Rat(cheb_u_norm(t, tp.q, tp.k - 2)) * sym;
    }
    return Rat(euler_phi(l)) * make_rat(1, 2) * sum;
}

Rat trace_hyperbolic_term(const TraceParams& tp) {
    std::int64_t l = tp.level();
    std::int64_t lm = l * tp.M;
    Rat sum(0);
    for (std::int64_t b : divisors(tp.q)) {
        std::int64_t qb = tp.q / b;
        Int weight = 1;
        std::int64_t mn = std::min(b, qb);
        for (int i = 0; i < tp.k - 1; ++i) weight *= mn;
        Rat inner(0);
        for (std::int64_t tau : divisors(lm)) {
            std::int64_t g = std::gcd(tau, lm / tau);
            if ((b - qb) % g != 0) continue;
            auto [y, mod_lcm] = crt_pair(mod_reduce(b, tau), tau, mod_reduce(qb, lm / tau), lm / tau);
            std::int64_t dm = l * std::gcd(tp.M, g) / g; // modulus of the delta pair
            std::int64_t x = mod_reduce(y * tp.d, dm);
            int deltas = delta_mod(x, 1, dm) + (tp.k % 2 == 0 ? 1 : -1) * delta_mod(x, -1, dm);
            if (deltas == 0) continue;
            inner += Rat(euler_phi(g)) * Rat(euler_phi(dm)) * Rat(deltas);
        }
        sum += Rat(weight) * inner;
    }
    return sum * make_rat(1, 4);
}

Rat trace_dual_term(const TraceParams& tp) {
    return tp.k == 2 ? Rat(sigma(tp.q)) : Rat(0);
}

Rat hecke_trace(const TraceParams& tp) {
    return trace_identity_term(tp) - trace_elliptic_term(tp) - trace_hyperbolic_term(tp) +
           trace_dual_term(tp);
}

Rat normalized_elliptic_sum(std::int64_t p, int r, std::int64_t n1, std::int64_t lambda,
                            std::int64_t q, std::int64_t d, int k) {
    if (r < 0) throw std::invalid_argument("normalized_elliptic_sum: need r >= 0");
    std::int64_t level = ipow(p, r) * n1;
    std::int64_t L = std::gcd(d * d * q - 1, n1);
    if (lambda < 1 || L % lambda != 0)
        throw std::invalid_argument("normalized_elliptic_sum: lambda must divide gcd(d^2 q - 1, n1)");
    std::int64_t tmax = isqrt_ll(4 * q - 1);

    Rat sum(0);
    for (std::int64_t Lam : divisors(L / lambda)) {
        CongParams cp(level, lambda * Lam, q, d);
        Rat inner(0);
        for (std::int64_t t = -tmax; t <= tmax; ++t) {
            Rat h = class_number_sum(cp, t);
            if (h == 0) continue;
            inner += Rat(cheb_u_norm(t, q, k - 2)) * h;
        }
        sum += Rat(euler_phi(Lam * Lam)) * Rat(euler_phi(level / (lambda * Lam))) * inner;
    }
    return sum;
}

Rat trace_side_moment(const AbelianSpec& spec, std::int64_t q, int k) {
    if (spec.r < 1)
        throw std::invalid_argument("trace_side_moment: the order of A must be divisible by p");
    if (spec.n2 % spec.p == 0)
        throw std::invalid_argument("trace_side_moment: need p coprime to n2");
    auto f = factorize(q);
    if (f.factors.size() != 1 || f.factors[0].prime != spec.p)
        throw std::invalid_argument("trace_side_moment: q must be a power of the characteristic of A");
    if (std::gcd(spec.n1, q) != 1)
        throw std::invalid_argument("trace_side_moment: need gcd(n1, q) = 1");

    if (mod_reduce(q - 1, spec.n2) != 0) return Rat(0);

    std::int64_t level = ipow(spec.p, spec.r) * spec.n1;
    std::int64_t L = std::gcd(q - 1, spec.n1);
    Rat sum(0);
    for (std::int64_t nu : divisors(L / spec.n2))
        sum += Rat(phi_tilde(nu)) * normalized_elliptic_sum(spec.p, spec.r, spec.n1, spec.n2 * nu, q, 1, k);
    return sum * make_rat(1, Int(q) * euler_phi(level / spec.n2));
}

bool collapse_identity_holds(std::int64_t p, int r, std::int64_t n1, std::int64_t n2,
                             std::int64_t q, std::int64_t d, int k) {
    std::int64_t level = ipow(p, r) * n1;
    std::int64_t L = std::gcd(d * d * q - 1, n1);
    if (n2 < 1 || L % n2 != 0)
        throw std::invalid_argument("collapse_identity_holds: need n2 | gcd(d^2 q - 1, n1)");

    Rat lhs(0);
    for (std::int64_t nu : divisors(L / n2))
        lhs += Rat(phi_tilde(nu)) * normalized_elliptic_sum(p, r, n1, n2 * nu, q, d, k);
    lhs *= make_rat(1, euler_phi(level / n2));

    CongParams cp(level, n2, q, d);
    std::int64_t tmax = isqrt_ll(4 * q - 1);
    Rat rhs(0);
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        Rat h = class_number_sum(cp, t);
        if (h == 0) continue;
        rhs += Rat(cheb_u_norm(t, q, k - 2)) * h;
    }
    return lhs == rhs;
}

} // namespace ecm
