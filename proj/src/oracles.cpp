#include "ecmoment/oracles.hpp"

#include <stdexcept>

namespace ecm {

QSeries series_make(std::vector<Int> coeffs, int precision) {
    coeffs.resize((size_t)precision + 1);
    return {std::move(coeffs)};
}

QSeries series_mul(const QSeries& a, const QSeries& b, int precision) {
    std::vector<Int> r((size_t)precision + 1);
    for (size_t i = 0; i < a.coefficients.size() && i <= (size_t)precision; ++i) {
        if (a.coefficients[i] == 0) continue;
        for (size_t j = 0; j < b.coefficients.size() && i + j <= (size_t)precision; ++j)
            r[i + j] += a.coefficients[i] * b.coefficients[j];
    }
    return {std::move(r)};
}

QSeries series_pow(const QSeries& a, int e, int precision) {
    if (e < 0) throw std::invalid_argument("series_pow: negative exponent");
    QSeries r = series_make({Int(1)}, precision);
    for (int i = 0; i < e; ++i) r = series_mul(r, a, precision);
    return r;
}

QSeries delta_series(int precision) {
    if (precision < 1) throw std::invalid_argument("delta_series: precision must be >= 1");
    QSeries prod = series_make({Int(1)}, precision);
    for (int n = 1; n <= precision; ++n) {
        std::vector<Int> factor((size_t)n + 1);
        factor[0] = 1;
        factor[(size_t)n] = -1;
        prod = series_mul(prod, series_pow(series_make(std::move(factor), precision), 24, precision), precision);
    }
    std::vector<Int> shifted((size_t)precision + 1);
    for (int i = 1; i <= precision; ++i) shifted[(size_t)i] = prod.coefficients[(size_t)i - 1];
    return {std::move(shifted)};
}

QSeries eisenstein(int weight, int precision) {
    if (weight != 4 && weight != 6) throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    std::vector<Int> c((size_t)precision + 1);
    c[0] = 1;
    const int power = weight - 1;
    const Int scale = weight == 4 ? 240 : -504;
    for (int n = 1; n <= precision; ++n) {
        Int s = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            Int dp = 1;
            for (int i = 0; i < power; ++i) dp *= d;
            s += dp;
        }
        c[(size_t)n] = scale * s;
    }
    return {std::move(c)};
}

std::vector<QSeries> level1_cusp_basis(int k, int precision) {
    if (k % 2 != 0) throw std::invalid_argument("level1_cusp_basis: k must be even");
    if (k < 2 || k > 26) throw std::invalid_argument("level1_cusp_basis: k must be in [2, 26]");
    if (k == 24) throw std::invalid_argument("level1_cusp_basis: weight 24 is two-dimensional");
    if (k < 12 || k == 14) return {};
    int rem = k - 12;
    for (int b = 0; 6 * b <= rem; ++b) {
        if ((rem - 6 * b) % 4 != 0) continue;
        int a = (rem - 6 * b) / 4;
        QSeries f = delta_series(precision);
        if (a > 0) f = series_mul(f, series_pow(eisenstein(4, precision), a, precision), precision);
        if (b > 0) f = series_mul(f, series_pow(eisenstein(6, precision), b, precision), precision);
        return {f};
    }
    return {};
}

} // namespace ecm
