#include "doctest.h"

#include "ecmoment/curves.hpp"
#include "ecmoment/rational.hpp"

using namespace ecm;

TEST_CASE("rational serialization") {
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(make_rat(1, 3)) == "1/3");
    CHECK(rat_to_string(make_rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(make_rat(2, -4)) == "-1/2"); // normalized, positive denominator
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK_THROWS(make_rat(1, 0));
    for (int num = -20; num <= 20; ++num)
        for (int den = 1; den <= 9; ++den) {
            Rat r = make_rat(num, den);
            CHECK(rat_from_string(rat_to_string(r)) == r);
        }
}

TEST_CASE("census report serialization is stable") {
    CensusReport rep;
    rep.q = 2;
    rep.buckets = {{-2, make_rat(1, 8), Rat(0)}, {0, make_rat(1, 4), make_rat(1, 4)}};
    rep.total_mass = Rat(2);
    CHECK(rep.to_json() ==
          "{\"q\": 2, \"buckets\": ["
          "{\"t\": -2, \"mass_all\": \"1/8\", \"mass_A\": \"0\"}, "
          "{\"t\": 0, \"mass_all\": \"1/4\", \"mass_A\": \"1/4\"}"
          "], \"total_mass\": \"2\"}");
    CHECK(rep.to_csv() == "t,mass_all,mass_A\n-2,1/8,0\n0,1/4,1/4\n");
}
