#pragma once

#include "ecmoment/rational.hpp"

#include <vector>

namespace ecm {

// Truncated integer q-expansion: coefficients[0..precision].
struct QSeries {
    std::vector<Int> coefficients;

    int precision() const { return (int)coefficients.size() - 1; }
    const Int& coefficient(int n) const { return coefficients.at((size_t)n); }
};

QSeries series_make(std::vector<Int> coeffs, int precision);
QSeries series_mul(const QSeries& a, const QSeries& b, int precision);
QSeries series_pow(const QSeries& a, int e, int precision);

// x prod_{n=1}^{precision} (1 - x^n)^24; coefficient(n) is the n-th Fourier
// coefficient of the weight-12 discriminant cusp form.
QSeries delta_series(int precision);

// E4 = 1 + 240 sum sigma_3(n) x^n, E6 = 1 - 504 sum sigma_5(n) x^n.
QSeries eisenstein(int weight, int precision);

// Basis of the weight-k level-1 cusp space as delta * E4^a * E6^b with
// 4a + 6b = k - 12: empty for k <= 10 and k = 14, one form for
// k in {12, 16, 18, 20, 22, 26}.  Rejects odd k, k outside [2, 26], and
// k = 24 (two-dimensional, outside this oracle's scope).
std::vector<QSeries> level1_cusp_basis(int k, int precision);

} // namespace ecm
