#pragma once

#include "ecmoment/curves.hpp"
#include "ecmoment/rational.hpp"

#include <cstdint>

namespace ecm {

// Inputs for Tr(T_q <d> | S_k(G(p^r N, M))): level p^r N with p the
// characteristic of q, gcd(N, q) = 1, M | N, d a unit mod p^r N with
// d^2 q = 1 (mod M), weight k >= 2.
struct TraceParams {
    std::int64_t N, M, q, d;
    int k;
    int r;

    TraceParams(std::int64_t N, std::int64_t M, std::int64_t q, std::int64_t d, int k, int r = 0);
    std::int64_t p() const { return p_; }
    std::int64_t level() const { return level_; } // p^r N

private:
    std::int64_t p_ = 0, level_ = 0;
};

// Identity term: phi(l) (k-1)/24 q^{k/2-1} psi(lM)(d_l(q^{1/2}d,1) + (-1)^k d_l(q^{1/2}d,-1));
// zero when q is not a perfect square.
Rat trace_identity_term(const TraceParams& tp);

// Elliptic term via the class-number sums H_{l, Lambda M}.
Rat trace_elliptic_term(const TraceParams& tp);

// Elliptic term assembled from the root-count sums C_{l,M}(t,q,+-d)
// instead; equality with trace_elliptic_term is a lemma-grade cross-check.
Rat trace_elliptic_term_via_roots(const TraceParams& tp);

// Hyperbolic term: (1/4) sum_{b|q} min(b,q/b)^{k-1} sum over tau | lM with
// g = (tau, lM/tau) dividing b - q/b of phi(g) phi(l(M,g)/g) times the
// two delta factors at y_tau d, where y_tau solves y = b (mod tau),
// y = q/b (mod lM/tau).
Rat trace_hyperbolic_term(const TraceParams& tp);

// Dual term sigma(q) when k = 2, else 0.
Rat trace_dual_term(const TraceParams& tp);

// T_id - T_ell - T_hyp + T_dual; an integer on the whole supported grid.
Rat hecke_trace(const TraceParams& tp);

// T_{p^r n1, lambda}(q, d) in its explicit form:
//   sum_{Lambda | L/lambda} phi(Lambda^2) phi(p^r n1/(lambda Lambda))
//     sum_{t^2<4q} U_{k-2}(t,q) H_{p^r n1, lambda Lambda}(t,q,d),
// L = gcd(d^2 q - 1, n1).  Rejects lambda not dividing L.
Rat normalized_elliptic_sum(std::int64_t p, int r, std::int64_t n1, std::int64_t lambda,
                            std::int64_t q, std::int64_t d, int k);

// Right side of the main identity:
//   (1/(q phi(p^r n1/n2))) sum_{nu | gcd(q-1, p^r n1)/n2} phi~(nu)
//     T_{p^r n1, n2 nu}(q, 1)
// when q = 1 (mod n2), and 0 otherwise.  Requires r >= 1 and p coprime
// to n2.
Rat trace_side_moment(const AbelianSpec& spec, std::int64_t q, int k);

// Collapse identity: (1/phi(p^r n1/n2)) sum_{nu | L/n2} phi~(nu)
// T_{p^r n1, n2 nu}(q,d) against sum_t U_{k-2}(t,q) H_{p^r n1,n2}(t,q,d).
bool collapse_identity_holds(std::int64_t p, int r, std::int64_t n1, std::int64_t n2,
                             std::int64_t q, std::int64_t d, int k);

} // namespace ecm
