#include "ecmoment/quadforms.hpp"

#include "ecmoment/numtheory.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ecm {

namespace {

bool discriminant_ok(std::int64_t D) {
    return D < 0 && (mod_reduce(D, 4) == 0 || mod_reduce(D, 4) == 1);
}

} // namespace

std::vector<ReducedForm> reduced_forms(std::int64_t D) {
    if (!discriminant_ok(D))
        throw std::invalid_argument("reduced_forms: need D < 0 with D = 0,1 mod 4");
    std::vector<ReducedForm> forms;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue; // boundary convention
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::int64_t class_number(std::int64_t D) {
    return (std::int64_t)reduced_forms(D).size();
}

Rat weighted_class_number(std::int64_t D) {
    if (D >= 0) throw std::invalid_argument("weighted_class_number: need D < 0");
    std::int64_t m4 = mod_reduce(D, 4);
    if (m4 == 2 || m4 == 3) return Rat(0);
    std::int64_t h = class_number(D);
    if (D == -3) return make_rat(h, 3);
    if (D == -4) return make_rat(h, 2);
    return Rat(h);
}

Rat hurwitz_class_number(std::int64_t delta) {
    if (delta >= 0) return Rat(0);
    std::int64_t m4 = mod_reduce(delta, 4);
    if (m4 == 2 || m4 == 3) return Rat(0);

    // The trace formula re-queries the same discriminants heavily; cache.
    static std::mutex mu;
    static std::unordered_map<std::int64_t, Rat> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(delta);
        if (it != memo.end()) return it->second;
    }

    Rat sum(0);
    for (std::int64_t f = 1; f * f <= -delta; ++f) {
        if (delta % (f * f) != 0) continue;
        std::int64_t d = delta / (f * f);
        std::int64_t dm4 = mod_reduce(d, 4);
        if (dm4 == 2 || dm4 == 3) continue;
        sum += weighted_class_number(d);
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(delta, sum);
    return sum;
}

Rat hurwitz_class_number(const Rat& delta) {
    if (!is_integer(delta)) return Rat(0);
    Int num = boost::multiprecision::numerator(delta);
    if (num >= 0) return Rat(0);
    return hurwitz_class_number((std::int64_t)num);
}

} // namespace ecm
