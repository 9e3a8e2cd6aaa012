#include "ecmoment/hecke.hpp"

#include "ecmoment/numtheory.hpp"
#include "ecmoment/quadforms.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ecm {

CongParams::CongParams(std::int64_t n1_, std::int64_t n2_, std::int64_t q_, std::int64_t d_)
    : n1(n1_), n2(n2_), q(q_), d(mod_reduce(d_, n1_)) {
    if (n1 < 1 || n2 < 1 || n1 % n2 != 0)
        throw std::invalid_argument("CongParams: need n2 | n1");
    if (q < 1) throw std::invalid_argument("CongParams: need q >= 1");
    if (std::gcd(d, n1) != 1 && n1 > 1)
        throw std::invalid_argument("CongParams: d must be a unit mod n1");
}

int delta_mod(std::int64_t a, std::int64_t b, std::int64_t c) {
    return mod_reduce(a - b, c) == 0 ? 1 : 0;
}

std::int64_t lift_value(const CongParams& cp, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("lift_value: modulus must be positive");
    if (n == 1) return 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> residues;
    for (auto [l, e] : factorize(n)) {
        std::int64_t le = ipow(l, e);
        std::int64_t r = cp.n1 % l == 0 ? mod_reduce(cp.d, le) : 1;
        residues.push_back({r, le});
    }
    auto [dt, mod] = crt_combine(residues);
    return mod_reduce(dt * cp.q + mod_inverse(dt, n), n);
}

int trace_match(const CongParams& cp, std::int64_t t, std::int64_t n) {
    return delta_mod(lift_value(cp, n), t, n);
}

int trace_match_profile(const CongParams& cp, std::int64_t nu, std::int64_t mu, std::int64_t t) {
    std::int64_t base = cp.n1 * cp.n2;
    for (auto [l, e] : factorize(nu)) {
        int factor;
        if (mu % l == 0) {
            int v = valuation(l, base) + valuation(l, mu);
            factor = trace_match(cp, t, ipow(l, v - 1)) - trace_match(cp, t, ipow(l, v));
        } else {
            factor = trace_match(cp, t, ipow(l, valuation(l, base)));
        }
        if (factor == 0) return 0;
    }
    return 1;
}

std::vector<std::int64_t> frobenius_roots(std::int64_t N, std::int64_t m, std::int64_t t, std::int64_t q) {
    if (N < 1 || m < 1) throw std::invalid_argument("frobenius_roots: need N, m >= 1");

    static std::mutex mu_;
    static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>,
                    std::vector<std::int64_t>> memo;
    auto key = std::make_tuple(N, m, t, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::int64_t big = N * std::gcd(N, m);
    std::vector<std::int64_t> out;
    std::vector<bool> seen((size_t)N, false);
    for (std::int64_t c = 0; c < big; ++c) {
        if (std::gcd(c, big) != 1 && big > 1) continue;
        if (mod_reduce(c * c - t * c + q, big) != 0) continue;
        std::int64_t r = mod_reduce(c, N);
        if (!seen[(size_t)r]) { seen[(size_t)r] = true; out.push_back(r); }
    }
    std::sort(out.begin(), out.end());

    std::lock_guard<std::mutex> lock(mu_);
    memo.emplace(key, out);
    return out;
}

std::int64_t matched_root_count(std::int64_t N, std::int64_t M, std::int64_t m,
                                std::int64_t d, std::int64_t t, std::int64_t q) {
    std::int64_t dinv = N == 1 ? 0 : mod_inverse(d, N);
    std::int64_t count = 0;
    for (std::int64_t c : frobenius_roots(M * N, m, t, q))
        if (mod_reduce(c, N) == dinv) ++count;
    return count;
}

Rat root_class_sum(std::int64_t N, std::int64_t M, std::int64_t t, std::int64_t q, std::int64_t d) {
    if (t * t >= 4 * q) throw std::invalid_argument("root_class_sum: need t^2 < 4q");
    if (M < 1 || N % M != 0) throw std::invalid_argument("root_class_sum: need M | N");
    std::int64_t delta = t * t - 4 * q;
    Rat sum(0);
    for (std::int64_t m = 1; m * m <= -delta; ++m) {
        if (delta % (m * m) != 0) continue;
        Rat hw = weighted_class_number(delta / (m * m));
        if (hw == 0) continue;
        std::int64_t w = matched_root_count(N, M, m, d, t, q);
        if (w == 0) continue;
        Rat ratio = make_rat(psi(M * N), psi(M * N / std::gcd(M * N, m)));
        sum += hw * ratio * Rat(w);
    }
    return sum;
}

} // namespace ecm
