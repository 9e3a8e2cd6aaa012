#include "ecmoment/verify.hpp"

#include "ecmoment/chebyshev.hpp"
#include "ecmoment/classsum.hpp"
#include "ecmoment/curves.hpp"
#include "ecmoment/finitefield.hpp"
#include "ecmoment/hecke.hpp"
#include "ecmoment/numtheory.hpp"
#include "ecmoment/oracles.hpp"
#include "ecmoment/quadforms.hpp"
#include "ecmoment/traceformula.hpp"

#include <numeric>
#include <sstream>

namespace ecm {

namespace {

std::string fmt_params(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

std::vector<std::int64_t> prime_powers_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= bound; ++q)
        if (factorize(q).factors.size() == 1) out.push_back(q);
    return out;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    if (n == 1) return {0};
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d < n; ++d)
        if (std::gcd(d, n) == 1) out.push_back(d);
    return out;
}

} // namespace

CheckGroup verify_level1_traces() {
    CheckGroup g{"level1-traces", "level-1 Hecke trace vs q-expansion oracle"};
    const std::vector<std::int64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};
    for (int k : {12, 16, 18, 20, 22, 26}) {
        auto basis = level1_cusp_basis(k, 13);
        for (std::int64_t q : qs) {
            Rat tr = hecke_trace(TraceParams(1, 1, q, 1, k, 0));
            Rat expect(basis[0].coefficient((int)q));
            g.record(fmt_params({{"k", k}, {"q", q}}), tr == expect, rat_to_string(tr),
                     rat_to_string(expect));
        }
    }
    for (int k : {2, 4, 6, 8, 10, 14}) {
        for (std::int64_t q : qs) {
            Rat tr = hecke_trace(TraceParams(1, 1, q, 1, k, 0));
            g.record(fmt_params({{"k", k}, {"q", q}}), tr == 0, rat_to_string(tr), "0");
        }
    }
    return g;
}

CheckGroup verify_mass_formula(const std::vector<std::int64_t>& qs) {
    CheckGroup g{"mass-formula", "census total mass q; nonsingular tuples q^4(q-1)"};
    for (std::int64_t q : qs) {
        auto ctx = FieldCtx::for_prime_power(q);
        const ShapeCensus& shapes = cached_shape_census(*ctx);
        std::int64_t expect = q * q * q * q * (q - 1);
        g.record(fmt_params({{"q", q}}) + " tuples", shapes.nonsingular_tuples() == expect,
                 std::to_string(shapes.nonsingular_tuples()), std::to_string(expect));
        CensusReport rep = make_census_report(shapes, AbelianSpec::make(1, 1, q));
        g.record(fmt_params({{"q", q}}) + " mass", rep.total_mass == Rat(q),
                 rat_to_string(rep.total_mass), std::to_string(q));
    }
    return g;
}

CheckGroup verify_curve_theorem(const std::vector<std::int64_t>& qs, std::int64_t m1_max) {
    CheckGroup g{"curve-theorem", "q*P_q(C(A,t)) = H_{n1,n2}(t,q,1) for ordinary t"};
    for (std::int64_t q : qs) {
        auto ctx = FieldCtx::for_prime_power(q);
        std::int64_t p = ctx->p();
        std::int64_t tmax = isqrt_ll(4 * q - 1);
        for (std::int64_t m1 = 1; m1 <= m1_max; ++m1) {
            if (m1 % p == 0) continue;
            for (std::int64_t m2 = 1; m2 <= m1; ++m2) {
                if (m1 % m2 != 0) continue;
                AbelianSpec spec = AbelianSpec::make(m1, m2, q);
                CongParams cp(m1, m2, q, 1);
                for (std::int64_t t = -tmax; t <= tmax; ++t) {
                    if (t % p == 0) continue;
                    Rat lhs = Rat(q) * trace_probability(*ctx, spec, t);
                    Rat rhs = class_number_sum(cp, t);
                    g.record(fmt_params({{"q", q}, {"m1", m1}, {"m2", m2}, {"t", t}}), lhs == rhs,
                             rat_to_string(lhs), rat_to_string(rhs));
                }
            }
        }
    }
    return g;
}

CheckGroup verify_main_theorem(const std::vector<std::int64_t>& qs, std::int64_t m1_max,
                               const std::vector<int>& ks, const MainTheoremFilter& filter) {
    CheckGroup g{"main-theorem", "curve moment vs trace-side expression, p | #A"};
    for (std::int64_t q : qs) {
        if (filter.q && q != filter.q) continue;
        auto ctx = FieldCtx::for_prime_power(q);
        std::int64_t p = ctx->p();
        for (std::int64_t m1 = 1; m1 <= m1_max; ++m1) {
            if (m1 % p != 0) continue; // p must divide #A
            if (filter.m1 && m1 != filter.m1) continue;
            for (std::int64_t m2 = 1; m2 <= m1; ++m2) {
                if (m1 % m2 != 0 || m2 % p == 0) continue;
                if (filter.m2 && m2 != filter.m2) continue;
                AbelianSpec spec = AbelianSpec::make(m1, m2, q);
                for (int k : ks) {
                    if (filter.k && k != filter.k) continue;
                    Rat lhs = weighted_moment(*ctx, spec, k);
                    Rat rhs = trace_side_moment(spec, q, k);
                    g.record(fmt_params({{"q", q}, {"m1", m1}, {"m2", m2}, {"k", k}}), lhs == rhs,
                             rat_to_string(lhs), rat_to_string(rhs));
                }
                // Hasse-edge buckets contribute nothing once p | #A.
                if (is_perfect_square(q)) {
                    std::int64_t edge = 2 * isqrt_ll(q);
                    for (std::int64_t t : {-edge, edge}) {
                        Rat pr = trace_probability(*ctx, spec, t);
                        g.record(fmt_params({{"q", q}, {"m1", m1}, {"m2", m2}, {"t", t}}) + " hasse-edge",
                                 pr == 0, rat_to_string(pr), "0");
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_lift_independence(std::int64_t n1n2_max, std::int64_t q_max) {
    CheckGroup g{"lift-independence", "lift value constant over every unit lift"};
    auto qs = prime_powers_up_to(q_max);
    for (std::int64_t n1 = 1; n1 * n1 <= n1n2_max * n1n2_max; ++n1) {
        for (std::int64_t n2 = 1; n2 <= n1; ++n2) {
            if (n1 % n2 != 0 || n1 * n2 > n1n2_max) continue;
            std::int64_t big = n1 * n2;
            auto ns = divisors(big);
            for (std::int64_t q : qs) {
                for (std::int64_t d : units_mod(n1)) {
                    if (mod_reduce(d * d * q - 1, n2) != 0) continue;
                    CongParams cp(n1, n2, q, d);
                    for (std::int64_t n : ns) {
                        std::int64_t canon = lift_value(cp, n);
                        bool ok = true;
                        for (std::int64_t lift = 0; lift < big; ++lift) {
                            if (std::gcd(lift, big) != 1 && big > 1) continue;
                            if (mod_reduce(lift - d, n1) != 0) continue;
                            std::int64_t x = mod_reduce(lift, n);
                            std::int64_t v = n == 1 ? 0 : mod_reduce(x * q + mod_inverse(x, n), n);
                            if (v != canon) { ok = false; break; }
                        }
                        g.record(fmt_params({{"n1", n1}, {"n2", n2}, {"q", q}, {"d", d}, {"n", n}}), ok,
                                 std::to_string(canon), "all lifts");
                        if (!ok) break;
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_class_sum_factorization() {
    CheckGroup g{"class-sum-factorization", "H at level p^r n1 = D(t;p^r) * H at level n1"};
    for (std::int64_t q : {2, 3, 4, 8, 9}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r : {1, 2}) {
            std::int64_t pr = ipow(p, r);
            for (std::int64_t n1 = 1; n1 <= 6; ++n1) {
                if (std::gcd(n1, q) != 1) continue;
                for (std::int64_t n2 = 1; n2 <= n1; ++n2) {
                    if (n1 % n2 != 0) continue;
                    std::int64_t tmax = isqrt_ll(4 * q - 1);
                    for (std::int64_t d : units_mod(pr * n1)) {
                        if (mod_reduce(d * d * q - 1, n2) != 0) continue;
                        CongParams lifted(pr * n1, n2, q, d);
                        CongParams base(n1, n2, q, mod_reduce(d, n1));
                        for (std::int64_t t = -tmax; t <= tmax; ++t) {
                            Rat lhs = class_number_sum_p_level(p, r, n1, n2, q, d, t);
                            Rat rhs = Rat(trace_match(lifted, t, pr)) * class_number_sum(base, t);
                            g.record(fmt_params({{"q", q}, {"r", r}, {"n1", n1}, {"n2", n2}, {"d", d}, {"t", t}}),
                                     lhs == rhs, rat_to_string(lhs), rat_to_string(rhs));
                            if (t % p == 0) {
                                g.record(fmt_params({{"q", q}, {"r", r}, {"n1", n1}, {"n2", n2}, {"d", d}, {"t", t}}) +
                                             " p|t-vanishing",
                                         lhs == 0, rat_to_string(lhs), "0");
                            }
                        }
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_root_count_lemma() {
    CheckGroup g{"root-count-lemma", "W_{p^r,1,m}(d) = D(t;p^r); p-part split of W"};
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r = 1; ipow(p, r) <= 16; ++r) {
            std::int64_t pr = ipow(p, r);
            std::int64_t tmax = isqrt_ll(4 * q - 1);
            for (std::int64_t t = -tmax; t <= tmax; ++t) {
                std::int64_t delta = t * t - 4 * q;
                for (std::int64_t m = 1; m * m <= -delta; ++m) {
                    if (delta % (m * m) != 0) continue;
                    for (std::int64_t d : units_mod(pr)) {
                        CongParams cp(pr, 1, q, d);
                        std::int64_t lhs = matched_root_count(pr, 1, m, d, t, q);
                        std::int64_t rhs = trace_match(cp, t, pr);
                        g.record(fmt_params({{"q", q}, {"r", r}, {"m", m}, {"d", d}, {"t", t}}), lhs == rhs,
                                 std::to_string(lhs), std::to_string(rhs));
                    }
                }
            }
        }
    }
    // W_{p^r N, M, m}(d) = W_{N,M,n}(d) W_{p^r,1,p^v}(d), m = n p^v.
    for (std::int64_t q : {2, 3, 4}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r : {1, 2}) {
            std::int64_t pr = ipow(p, r);
            for (std::int64_t N = 1; N <= 6; ++N) {
                if (std::gcd(N, q) != 1) continue;
                for (std::int64_t M : divisors(N)) {
                    std::int64_t tmax = isqrt_ll(4 * q - 1);
                    for (std::int64_t t = -tmax; t <= tmax; ++t) {
                        std::int64_t delta = t * t - 4 * q;
                        for (std::int64_t m = 1; m * m <= -delta; ++m) {
                            if (delta % (m * m) != 0) continue;
                            int kap = valuation(p, m);
                            std::int64_t n = m / ipow(p, kap);
                            for (std::int64_t d : units_mod(pr * N)) {
                                std::int64_t lhs = matched_root_count(pr * N, M, m, d, t, q);
                                std::int64_t rhs = matched_root_count(N, M, n, mod_reduce(d, N), t, q) *
                                                   matched_root_count(pr, 1, ipow(p, kap), mod_reduce(d, pr), t, q);
                                g.record(fmt_params({{"q", q}, {"r", r}, {"N", N}, {"M", M}, {"m", m}, {"d", d}, {"t", t}}),
                                         lhs == rhs, std::to_string(lhs), std::to_string(rhs));
                            }
                        }
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_root_class_factorization() {
    CheckGroup g{"root-class-factorization", "C_{p^r N,M} = D(t;p^r) C_{N,M}"};
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r : {1, 2}) {
            std::int64_t pr = ipow(p, r);
            for (std::int64_t N = 1; N <= 12; ++N) {
                if (std::gcd(N, q) != 1) continue;
                for (std::int64_t M : divisors(N)) {
                    std::int64_t tmax = isqrt_ll(4 * q - 1);
                    for (std::int64_t t = -tmax; t <= tmax; ++t) {
                        for (std::int64_t d : units_mod(pr * N)) {
                            if (mod_reduce(d * d * q - 1, M) != 0) continue;
                            CongParams cp(pr * N, M, q, d);
                            Rat lhs = root_class_sum(pr * N, M, t, q, d);
                            Rat rhs = Rat(trace_match(cp, t, pr)) * root_class_sum(N, M, t, q, mod_reduce(d, N));
                            g.record(fmt_params({{"q", q}, {"r", r}, {"N", N}, {"M", M}, {"d", d}, {"t", t}}),
                                     lhs == rhs, rat_to_string(lhs), rat_to_string(rhs));
                        }
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_root_class_vs_class_sum() {
    CheckGroup g{"root-class-vs-class-sum", "C_{N,M} against the H_{N,Lambda M} expansion"};
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::int64_t N = 1; N <= 12; ++N) {
            if (std::gcd(N, q) != 1) continue;
            for (std::int64_t M : divisors(N)) {
                std::int64_t tmax = isqrt_ll(4 * q - 1);
                for (std::int64_t d : units_mod(N)) {
                    if (mod_reduce(d * d * q - 1, M) != 0) continue;
                    std::int64_t L = std::gcd(d * d * q - 1, N);
                    for (std::int64_t t = -tmax; t <= tmax; ++t) {
                        Rat lhs = root_class_sum(N, M, t, q, d);
                        Rat rhs(0);
                        for (std::int64_t Lam : divisors(L / M)) {
                            CongParams cp(N, Lam * M, q, d);
                            rhs += Rat(euler_phi(Lam * Lam)) *
                                   make_rat(euler_phi(N / (M * Lam)), euler_phi(N / M)) *
                                   class_number_sum(cp, t);
                        }
                        rhs *= Rat(2) * make_rat(psi(N * N), psi(N * N / (M * M)));
                        g.record(fmt_params({{"q", q}, {"N", N}, {"M", M}, {"d", d}, {"t", t}}), lhs == rhs,
                                 rat_to_string(lhs), rat_to_string(rhs));
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_collapse_identity() {
    CheckGroup g{"dirichlet-collapse", "phi~ -weighted sum of T_{p^r n1, n2 nu} collapses"};
    for (std::int64_t q : {2, 3, 4, 5, 8, 9}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r : {1, 2}) {
            for (std::int64_t n1 = 1; n1 <= 6; ++n1) {
                if (std::gcd(n1, q) != 1) continue;
                for (std::int64_t n2 = 1; n2 <= n1; ++n2) {
                    if (n1 % n2 != 0) continue;
                    for (std::int64_t d : units_mod(ipow(p, r) * n1)) {
                        if (mod_reduce(d * d * q - 1, n2) != 0) continue;
                        for (int k : {2, 3, 4, 12}) {
                            bool ok = collapse_identity_holds(p, r, n1, n2, q, d, k);
                            g.record(fmt_params({{"q", q}, {"r", r}, {"n1", n1}, {"n2", n2}, {"d", d}, {"k", k}}),
                                     ok, ok ? "equal" : "differs", "equal");
                        }
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_trace_integrality() {
    CheckGroup g{"trace-integrality", "T_trace in Z across the trace grid"};
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        std::int64_t p = factorize(q).factors[0].prime;
        for (int r : {0, 1, 2}) {
            std::int64_t pr = ipow(p, r);
            for (std::int64_t N = 1; N <= 10; ++N) {
                if (std::gcd(N, q) != 1) continue;
                if (r == 2 && N > 4) continue; // keep the deep-level slice small
                for (std::int64_t M : divisors(N)) {
                    for (std::int64_t d : units_mod(pr * N)) {
                        if (mod_reduce(d * d * q - 1, M) != 0) continue;
                        for (int k = 2; k <= 16; ++k) {
                            TraceParams tp(N, M, q, d, k, r);
                            Rat tr = hecke_trace(tp);
                            g.record(fmt_params({{"q", q}, {"r", r}, {"N", N}, {"M", M}, {"d", d}, {"k", k}}),
                                     is_integer(tr), rat_to_string(tr), "integer");
                        }
                    }
                }
            }
        }
    }
    return g;
}

CheckGroup verify_census_determinism(const std::vector<std::int64_t>& qs, int workers) {
    CheckGroup g{"census-determinism", "census JSON identical across worker counts"};
    for (std::int64_t q : qs) {
        auto ctx = FieldCtx::for_prime_power(q);
        std::int64_t p = ctx->p();
        for (auto [m1, m2] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {p, 1}}) {
            AbelianSpec spec = AbelianSpec::make(m1, m2, q);
            std::string j1 = census(*ctx, spec, 1).to_json();
            std::string jw = census(*ctx, spec, workers).to_json();
            g.record(fmt_params({{"q", q}, {"m1", m1}, {"m2", m2}, {"workers", workers}}), j1 == jw,
                     "json(1 worker)", "json(" + std::to_string(workers) + " workers)");
        }
    }
    return g;
}

std::vector<CheckGroup> verify_lemma_suite() {
    return {verify_lift_independence(60, 27),
            verify_class_sum_factorization(),
            verify_root_count_lemma(),
            verify_root_class_factorization(),
            verify_root_class_vs_class_sum(),
            verify_collapse_identity()};
}

} // namespace ecm
