#include "ecmoment/classsum.hpp"

#include "ecmoment/numtheory.hpp"
#include "ecmoment/quadforms.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ecm {

Rat class_number_sum(const CongParams& cp, std::int64_t t) {
    if (t * t >= 4 * cp.q)
        throw std::invalid_argument("class_number_sum: need t^2 < 4q");

    // The trace grids sweep the same (n1, n2, q, d, t) tuples across many
    // weights; the sum itself is weight-free, so cache it.
    static std::mutex mu;
    static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>, Rat> memo;
    auto key = std::make_tuple(cp.n1, cp.n2, cp.q, cp.d, t);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const std::int64_t delta = t * t - 4 * cp.q;
    const Rat half = make_rat(1, 2);

    Rat sum(0);
    if (delta_mod(cp.d * cp.d * cp.q, 1, cp.n2)) {
        if (trace_match(cp, t, cp.n1 * cp.n2))
            sum += half * hurwitz_class_number(make_rat(delta, Int(cp.n2) * cp.n2));
    }

    for (std::int64_t m : full_divisors(cp.n1)) {
        if (m < 2) continue;
        int sign = liouville(m);
        for (std::int64_t mu : prec_list(m, cp.n1, cp.n2)) {
            std::int64_t n2mu = cp.n2 * mu;
            if (!delta_mod(cp.d * cp.d * cp.q, 1, n2mu)) continue;
            if (!trace_match_profile(cp, cp.n1, mu, t)) continue;
            Rat h = hurwitz_class_number(make_rat(delta, Int(n2mu) * n2mu));
            if (h == 0) continue;
            sum += Rat(sign) * half * h;
        }
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, sum);
    return sum;
}

Rat class_number_sum_p_level(std::int64_t p, int r, std::int64_t n1, std::int64_t n2,
                             std::int64_t q, std::int64_t d, std::int64_t t) {
    if (r < 1) throw std::invalid_argument("class_number_sum_p_level: need r >= 1");
    if (std::gcd(q, n1) != 1)
        throw std::invalid_argument("class_number_sum_p_level: need gcd(q, n1) = 1");
    CongParams lifted(ipow(p, r) * n1, n2, q, d);
    return class_number_sum(lifted, t);
}

} // namespace ecm
