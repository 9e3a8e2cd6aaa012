#pragma once

#include "ecmoment/finitefield.hpp"
#include "ecmoment/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ecm {

// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over a fixed F_q.  The long form is mandatory: characteristics 2 and 3
// occur throughout.
struct WeierstrassCurve {
    const FieldCtx* ctx;
    FieldElem a1, a2, a3, a4, a6;
};

struct CurvePoint {
    bool at_infinity = true;
    FieldElem x, y;
    bool operator==(const CurvePoint& o) const {
        if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
        return x == o.x && y == o.y;
    }
};

// E(F_q) = Z/n1 x Z/n2 with n2 | n1 and n2 | q-1.
struct GroupShape {
    std::int64_t n1, n2;
    bool operator==(const GroupShape&) const = default;
};

// A = Z/m1 x Z/m2 with m2 | m1, split against the characteristic p of the
// ambient field as m1 = p^r * n1 with p coprime to n1, n2 = m2.
struct AbelianSpec {
    std::int64_t m1, m2;
    std::int64_t p;
    int r;
    std::int64_t n1, n2;

    static AbelianSpec make(std::int64_t m1, std::int64_t m2, std::int64_t q);
    std::int64_t order() const { return m1 * m2; }
    // Theorem-grade inputs: r >= 1 and p coprime to n1*n2.
    bool p_divides_order() const { return r >= 1; }
    bool tame_part_coprime() const { return n2 % p != 0; }
};

FieldElem discriminant(const WeierstrassCurve& c);
bool is_nonsingular(const WeierstrassCurve& c);

// Group law in long form; negation is -(x,y) = (x, -y - a1 x - a3).
CurvePoint point_negate(const WeierstrassCurve& c, const CurvePoint& P);
CurvePoint point_add(const WeierstrassCurve& c, const CurvePoint& P, const CurvePoint& Q);
CurvePoint scalar_mul(const WeierstrassCurve& c, std::int64_t k, const CurvePoint& P);
std::int64_t point_order(const WeierstrassCurve& c, const CurvePoint& P);

std::vector<CurvePoint> affine_points(const WeierstrassCurve& c);
std::int64_t point_count(const WeierstrassCurve& c); // includes infinity
GroupShape group_shape(const WeierstrassCurve& c);

// Elementary-divisor criterion for rank <= 2 abelian groups.
bool embeds(const AbelianSpec& spec, const GroupShape& shape);

// Substitutions (u,r,s,t), u != 0, fixing the coefficient tuple.
std::int64_t aut_count(const WeierstrassCurve& c);

// Raw census over all q^5 coefficient tuples: tuple counts bucketed by
// (trace, group shape).  Each nonsingular tuple carries weight
// 1/(q^3(q-1)) under orbit-stabilizer, so per-shape masses are
// tuple_count / (q^3 (q-1)).
struct ShapeBucket {
    std::int64_t t;
    std::int64_t n1, n2;
    std::int64_t tuple_count;
};

struct ShapeCensus {
    std::int64_t q = 0;
    std::vector<ShapeBucket> buckets; // ascending (t, n1, n2)
    std::int64_t nonsingular_tuples() const;
};

// Exhaustive enumeration; tuple space is split across workers and the
// partial maps merged, so the result is identical for any worker count.
ShapeCensus enumerate_census(const FieldCtx& ctx, int workers = 1);

// Per-q cache of the enumeration (moment grids re-query it heavily).
const ShapeCensus& cached_shape_census(const FieldCtx& ctx);

struct CensusBucket {
    std::int64_t t;
    Rat mass_all; // sum over all curves with trace t of 1/#Aut
    Rat mass_A;   // same restricted to curves with A embedded
};

struct CensusReport {
    std::int64_t q = 0;
    std::vector<CensusBucket> buckets; // every t with |t| <= floor(2 sqrt q)
    Rat total_mass;
    std::string to_json() const;
    std::string to_csv() const;
};

CensusReport make_census_report(const ShapeCensus& shapes, const AbelianSpec& spec);
CensusReport census(const FieldCtx& ctx, const AbelianSpec& spec, int workers = 1);

// P_q(C(A,t)): census bucket at t, divided by q.  Zero outside Hasse range.
Rat trace_probability(const FieldCtx& ctx, const AbelianSpec& spec, std::int64_t t);

// E_q(U_{k-2}(t_E, q) Phi_A) = sum_t U_{k-2}(t,q) P_q(C(A,t)).
Rat weighted_moment(const FieldCtx& ctx, const AbelianSpec& spec, int k);

} // namespace ecm
