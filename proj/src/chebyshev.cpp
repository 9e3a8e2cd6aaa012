#include "ecmoment/chebyshev.hpp"

#include <stdexcept>

namespace ecm {

Int cheb_u_norm(std::int64_t t, std::int64_t q, int j) {
    if (j < 0) throw std::invalid_argument("cheb_u_norm: j must be >= 0");
    if (q < 1) throw std::invalid_argument("cheb_u_norm: q must be >= 1");
    Int prev = 1, cur = t;
    if (j == 0) return prev;
    for (int i = 2; i <= j; ++i) {
        Int next = t * cur - q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace ecm
