#pragma once

#include "ecmoment/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ecm {

struct Check {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

// One verification grid.  Individual check records are kept only for
// failures; `total` counts everything that ran.
struct CheckGroup {
    std::string name;
    std::string description;
    std::int64_t total = 0;
    std::vector<Check> failures;

    bool pass() const { return total > 0 && failures.empty(); }
    void record(const std::string& check_name, bool ok, const std::string& lhs, const std::string& rhs) {
        ++total;
        if (!ok) failures.push_back({check_name, false, lhs, rhs});
    }
};

// Optional restriction of the main-theorem sweep; zeros mean "no filter".
struct MainTheoremFilter {
    std::int64_t q = 0;
    std::int64_t m1 = 0, m2 = 0;
    int k = 0;
};

// Level-1 Hecke traces against the q-expansion oracle (one-dimensional
// weights and the empty weights).
CheckGroup verify_level1_traces();

// Census total mass equals q; nonsingular tuple count equals q^4(q-1).
CheckGroup verify_mass_formula(const std::vector<std::int64_t>& qs);

// q * P_q(C(A,t)) against the class-number sum at d = 1 for ordinary
// traces (p does not divide t, t^2 < 4q), gcd(#A, q) = 1.
CheckGroup verify_curve_theorem(const std::vector<std::int64_t>& qs, std::int64_t m1_max);

// The main identity: curve-side moment vs trace-side expression for every
// admissible A with p | #A, plus the vanishing branch q != 1 (mod n2) and
// the Hasse-edge buckets.
CheckGroup verify_main_theorem(const std::vector<std::int64_t>& qs, std::int64_t m1_max,
                               const std::vector<int>& ks, const MainTheoremFilter& filter = {});

// Lemma suite.
CheckGroup verify_lift_independence(std::int64_t n1n2_max, std::int64_t q_max);
CheckGroup verify_class_sum_factorization();   // H_{p^r n1, n2} = D(t;p^r) H_{n1,n2}
CheckGroup verify_root_count_lemma();          // W_{p^r,1,m}(d) = D(t;p^r), and the m-split
CheckGroup verify_root_class_factorization();  // C_{p^r N,M} = D(t;p^r) C_{N,M}
CheckGroup verify_root_class_vs_class_sum();   // C_{N,M} = 2 psi-ratio sum phi... H_{N,Lambda M}
CheckGroup verify_collapse_identity();         // Dirichlet collapse

// T_trace is an integer across the trace grid (all valid d, r in {0,1,2}).
CheckGroup verify_trace_integrality();

// Census JSON identical for 1 worker and for several workers.
CheckGroup verify_census_determinism(const std::vector<std::int64_t>& qs, int workers);

std::vector<CheckGroup> verify_lemma_suite();

} // namespace ecm
