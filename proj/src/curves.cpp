#include "ecmoment/curves.hpp"

#include "ecmoment/chebyshev.hpp"
#include "ecmoment/numtheory.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ecm {

AbelianSpec AbelianSpec::make(std::int64_t m1, std::int64_t m2, std::int64_t q) {
    if (m1 < 1 || m2 < 1 || m1 % m2 != 0)
        throw std::invalid_argument("AbelianSpec: need m2 | m1");
    auto f = factorize(q);
    if (f.factors.size() != 1)
        throw std::invalid_argument("AbelianSpec: q must be a prime power");
    AbelianSpec s;
    s.m1 = m1;
    s.m2 = m2;
    s.p = f.factors[0].prime;
    s.r = valuation(s.p, m1);
    s.n1 = m1 / ipow(s.p, s.r);
    s.n2 = m2;
    return s;
}

FieldElem discriminant(const WeierstrassCurve& c) {
    const FieldCtx& F = *c.ctx;
    auto k = [&](std::int64_t v) { return F.from_integer(v); };
    FieldElem b2 = c.a1 * c.a1 + k(4) * c.a2;
    FieldElem b4 = k(2) * c.a4 + c.a1 * c.a3;
    FieldElem b6 = c.a3 * c.a3 + k(4) * c.a6;
    FieldElem b8 = c.a1 * c.a1 * c.a6 + k(4) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 + c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

bool is_nonsingular(const WeierstrassCurve& c) { return !discriminant(c).is_zero(); }

CurvePoint point_negate(const WeierstrassCurve& c, const CurvePoint& P) {
    if (P.at_infinity) return P;
    return {false, P.x, -P.y - c.a1 * P.x - c.a3};
}

CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& P, const CurvePoint& Q) {
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    const FieldCtx& F = *c.ctx;
    if (P.x == Q.x && Q.y == (-P.y - c.a1 * P.x - c.a3)) return {};
    FieldElem lam;
    if (P.x == Q.x) { // doubling
        FieldElem num = F.from_integer(3) * P.x * P.x + F.from_integer(2) * c.a2 * P.x + c.a4 - c.a1 * P.y;
        FieldElem den = F.from_integer(2) * P.y + c.a1 * P.x + c.a3;
        lam = num * den.inverse();
    } else {
        lam = (Q.y - P.y) * (Q.x - P.x).inverse();
    }
    FieldElem nu = P.y - lam * P.x;
    FieldElem x3 = lam * lam + c.a1 * lam - c.a2 - P.x - Q.x;
    FieldElem y3 = -(lam + c.a1) * x3 - nu - c.a3;
    return {false, x3, y3};
}

CurvePoint scalar_mul(const WeierstrassCurve& c, std::int64_t k, const CurvePoint& P) {
    if (k < 0) return scalar_mul(c, -k, point_negate(c, P));
    CurvePoint acc{};
    CurvePoint base = P;
    while (k) {
        if (k & 1) acc = point_add(c, acc, base);
        base = point_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

std::int64_t point_order(const WeierstrassCurve& c, const CurvePoint& P) {
    std::int64_t n = 1;
    CurvePoint acc = P;
    while (!acc.at_infinity) {
        acc = point_add(c, acc, P);
        ++n;
    }
    return n;
}

std::vector<CurvePoint> affine_points(const WeierstrassCurve& c) {
    const FieldCtx& F = *c.ctx;
    std::vector<CurvePoint> pts;
    for (std::uint32_t xi = 0; xi < F.q(); ++xi) {
        FieldElem x = F.from_index(xi);
        FieldElem rhs = ((x + c.a2) * x + c.a4) * x + c.a6;
        FieldElem lin = c.a1 * x + c.a3;
        for (std::uint32_t yi = 0; yi < F.q(); ++yi) {
            FieldElem y = F.from_index(yi);
            if (y * y + lin * y == rhs) pts.push_back({false, x, y});
        }
    }
    return pts;
}

std::int64_t point_count(const WeierstrassCurve& c) {
    return (std::int64_t)affine_points(c).size() + 1;
}

GroupShape group_shape(const WeierstrassCurve& c) {
    auto pts = affine_points(c);
    std::int64_t order = (std::int64_t)pts.size() + 1;
    std::int64_t exponent = 1;
    for (const auto& P : pts) {
        if (scalar_mul(c, exponent, P).at_infinity) continue;
        exponent = std::lcm(exponent, point_order(c, P));
        if (exponent == order) break;
    }
    if (order % exponent != 0)
        throw std::logic_error("group_shape: exponent does not divide group order");
    return {exponent, order / exponent};
}

bool embeds(const AbelianSpec& spec, const GroupShape& shape) {
    return shape.n1 % spec.m1 == 0 && shape.n2 % spec.m2 == 0;
}

std::int64_t aut_count(const WeierstrassCurve& c) {
    const FieldCtx& F = *c.ctx;
    auto k = [&](std::int64_t v) { return F.from_integer(v); };
    std::int64_t count = 0;
    for (std::uint32_t ui = 1; ui < F.q(); ++ui) {
        FieldElem u = F.from_index(ui);
        FieldElem u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
        for (std::uint32_t ri = 0; ri < F.q(); ++ri) {
            FieldElem r = F.from_index(ri);
            for (std::uint32_t si = 0; si < F.q(); ++si) {
                FieldElem s = F.from_index(si);
                if (!((c.a1 + k(2) * s) == u * c.a1)) continue;
                if (!((c.a2 - s * c.a1 + k(3) * r - s * s) == u2 * c.a2)) continue;
                for (std::uint32_t ti = 0; ti < F.q(); ++ti) {
                    FieldElem t = F.from_index(ti);
                    if (!((c.a3 + r * c.a1 + k(2) * t) == u3 * c.a3)) continue;
                    if (!((c.a4 - s * c.a3 + k(2) * r * c.a2 - (t + r * s) * c.a1 + k(3) * r * r - k(2) * s * t) == u4 * c.a4)) continue;
                    if (!((c.a6 + r * c.a4 + r * r * c.a2 + r * r * r - t * c.a3 - t * t - r * t * c.a1) == u6 * c.a6)) continue;
                    ++count;
                }
            }
        }
    }
    return count;
}

std::int64_t ShapeCensus::nonsingular_tuples() const {
    std::int64_t total = 0;
    for (const auto& b : buckets) total += b.tuple_count;
    return total;
}

namespace {

using BucketMap = std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::int64_t>;

void census_range(const FieldCtx& F, std::uint64_t begin, std::uint64_t end, BucketMap& out) {
    std::int64_t q = F.q();
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        std::uint32_t i1 = (std::uint32_t)(rest % q); rest /= q;
        std::uint32_t i2 = (std::uint32_t)(rest % q); rest /= q;
        std::uint32_t i3 = (std::uint32_t)(rest % q); rest /= q;
        std::uint32_t i4 = (std::uint32_t)(rest % q); rest /= q;
        std::uint32_t i6 = (std::uint32_t)(rest % q);
        WeierstrassCurve c{&F, F.from_index(i1), F.from_index(i2), F.from_index(i3),
                           F.from_index(i4), F.from_index(i6)};
        if (discriminant(c).is_zero()) continue;
        GroupShape shape = group_shape(c);
        std::int64_t t = q + 1 - shape.n1 * shape.n2;
        ++out[{t, shape.n1, shape.n2}];
    }
}

} // namespace

ShapeCensus enumerate_census(const FieldCtx& ctx, int workers) {
    std::int64_t q = ctx.q();
    std::uint64_t total = 1;
    for (int i = 0; i < 5; ++i) total *= (std::uint64_t)q;

    if (workers < 1) workers = 1;
    if ((std::uint64_t)workers > total) workers = (int)total;

    std::vector<BucketMap> partial((size_t)workers);
    if (workers == 1) {
        census_range(ctx, 0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = total / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t begin = chunk * w;
            std::uint64_t end = (w == workers - 1) ? total : begin + chunk;
            threads.emplace_back(census_range, std::cref(ctx), begin, end, std::ref(partial[(size_t)w]));
        }
        for (auto& th : threads) th.join();
    }

    BucketMap merged;
    for (const auto& m : partial)
        for (const auto& [key, cnt] : m) merged[key] += cnt;

    ShapeCensus out;
    out.q = q;
    for (const auto& [key, cnt] : merged)
        out.buckets.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), cnt});
    return out;
}

const ShapeCensus& cached_shape_census(const FieldCtx& ctx) {
    static std::mutex mu;
    static std::map<std::int64_t, ShapeCensus> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ctx.q());
    if (it == cache.end()) {
        unsigned hw = std::thread::hardware_concurrency();
        int workers = hw ? (int)std::min<unsigned>(hw, 8) : 1;
        it = cache.emplace(ctx.q(), enumerate_census(ctx, workers)).first;
    }
    return it->second;
}

CensusReport make_census_report(const ShapeCensus& shapes, const AbelianSpec& spec) {
    std::int64_t q = shapes.q;
    Rat unit_mass = make_rat(1, Int(q) * q * q * (q - 1));
    std::int64_t tmax = isqrt_ll(4 * q);

    CensusReport rep;
    rep.q = q;
    rep.total_mass = Rat(0);
    for (std::int64_t t = -tmax; t <= tmax; ++t) rep.buckets.push_back({t, Rat(0), Rat(0)});
    for (const auto& b : shapes.buckets) {
        auto& slot = rep.buckets[(size_t)(b.t + tmax)];
        Rat mass = Rat(b.tuple_count) * unit_mass;
        slot.mass_all += mass;
        if (embeds(spec, {b.n1, b.n2})) slot.mass_A += mass;
        rep.total_mass += mass;
    }
    return rep;
}

CensusReport census(const FieldCtx& ctx, const AbelianSpec& spec, int workers) {
    return make_census_report(enumerate_census(ctx, workers), spec);
}

Rat trace_probability(const FieldCtx& ctx, const AbelianSpec& spec, std::int64_t t) {
    if (t * t > 4 * ctx.q()) return Rat(0);
    const ShapeCensus& shapes = cached_shape_census(ctx);
    Rat mass(0);
    for (const auto& b : shapes.buckets)
        if (b.t == t && embeds(spec, {b.n1, b.n2})) mass += Rat(b.tuple_count);
    return mass * make_rat(1, Int(ctx.q()) * ctx.q() * ctx.q() * ctx.q() * (ctx.q() - 1));
}

Rat weighted_moment(const FieldCtx& ctx, const AbelianSpec& spec, int k) {
    if (k < 2) throw std::invalid_argument("weighted_moment: need k >= 2");
    std::int64_t q = ctx.q();
    std::int64_t tmax = isqrt_ll(4 * q);
    Rat sum(0);
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        Rat p = trace_probability(ctx, spec, t);
        if (p == 0) continue;
        sum += Rat(cheb_u_norm(t, q, k - 2)) * p;
    }
    return sum;
}

std::string CensusReport::to_json() const {
    std::ostringstream os;
    os << "{\"q\": " << q << ", \"buckets\": [";
    for (size_t i = 0; i < buckets.size(); ++i) {
        if (i) os << ", ";
        os << "{\"t\": " << buckets[i].t
           << ", \"mass_all\": \"" << rat_to_string(buckets[i].mass_all)
           << "\", \"mass_A\": \"" << rat_to_string(buckets[i].mass_A) << "\"}";
    }
    os << "], \"total_mass\": \"" << rat_to_string(total_mass) << "\"}";
    return os.str();
}

std::string CensusReport::to_csv() const {
    std::ostringstream os;
    os << "t,mass_all,mass_A\n";
    for (const auto& b : buckets)
        os << b.t << "," << rat_to_string(b.mass_all) << "," << rat_to_string(b.mass_A) << "\n";
    return os.str();
}

} // namespace ecm
