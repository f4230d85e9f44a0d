#include "doctest.h"
#include "motivic/ranges.hpp"

#include <stdexcept>

using namespace motivic;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational half(1, 2);
    Rational third(2, 6);
    CHECK(third.num == 1);
    CHECK(third.den == 3);
    CHECK((half + third) == Rational(5, 6));
    CHECK((half - third) == Rational(1, 6));
    CHECK((half * third) == Rational(1, 6));
    CHECK(Rational(-1, -2) == half);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("floor division is sign-correct") {
    CHECK(floordiv(7, 2) == 3);
    CHECK(floordiv(-7, 2) == -4);
    CHECK(floordiv(-6, 2) == -3);
    CHECK(floordiv(6, 2) == 3);
    CHECK(floor_of(Rational(-13, 4)) == -4);
    CHECK(floor_of(Rational(13, 4)) == 3);
}

TEST_CASE("the odd-p cut line at the pinned points") {
    CHECK(odd_p_bound(3, 2) == -2);
    CHECK(odd_p_bound(3, 0) == -5);
    CHECK(odd_p_bound(5, 4) == 0);
    CHECK(odd_p_bound(3, 1) == -4);
}

TEST_CASE("the cut line has periodic affine structure") {
    for (Fp p : {Fp{3}, Fp{5}, Fp{7}, Fp{97}}) {
        for (long long n = -20; n <= 20; ++n) {
            CHECK(odd_p_bound(p, n + (p - 1)) == odd_p_bound(p, n) + p);
        }
    }
}

TEST_CASE("two-primary regions") {
    RangePredicate di = di_region();
    CHECK(di.contains(-5, 0));
    CHECK_FALSE(di.contains(-6, 0));
    CHECK(di_injection_line(-6, 0));
    CHECK_FALSE(di_injection_line(-5, 0));
    CHECK(di.contains(0, 0));
    CHECK(di.contains(-1, 2));
    CHECK_FALSE(di.contains(-2, 2));

    RangePredicate betti = betti_region();
    CHECK(betti.contains(0, 0));
    CHECK(betti.contains(-5, 0));
    CHECK_FALSE(betti.contains(-5, -1));  // inside the half-plane, weight < 0
    CHECK_FALSE(betti.contains(-6, 0));
}

TEST_CASE("floor-bound predicates match the cut line") {
    RangePredicate iso = RangePredicate::floor_bound(3, 1);
    for (long long n = -6; n <= 6; ++n) {
        long long cut = odd_p_bound(3, n) + 1;
        CHECK(iso.contains(cut, n));
        CHECK_FALSE(iso.contains(cut - 1, n));
    }
}

TEST_CASE("domination of the two-primary region") {
    // at every weight n >= 1 the whole 2-primary region sits inside the
    // odd-p region, for any odd p
    for (Fp p : {Fp{3}, Fp{5}, Fp{97}}) {
        DominationReport r = check_domination(p, 1, 40);
        CHECK(r.contained());
        CHECK(r.exceptions_negative_stem);
    }
    // weight 0 fails by exactly one cell, (-5, 0), of negative stem
    DominationReport z = check_domination(3, 0, 40);
    REQUIRE(z.exceptions.size() == 1);
    CHECK(z.exceptions[0].n == 0);
    CHECK(z.exceptions[0].m_lo == -5);
    CHECK(z.exceptions[0].m_hi == -5);
    CHECK(z.exceptions_negative_stem);
    DominationReport z5 = check_domination(5, 0, 40);
    REQUIRE(z5.exceptions.size() == 1);
    CHECK(z5.exceptions[0].n == 0);
    CHECK(z5.exceptions_negative_stem);
    // negative weights are all exceptional but all of negative stem
    DominationReport neg = check_domination(3, -5, 5);
    CHECK_FALSE(neg.contained());
    CHECK(neg.exceptions_negative_stem);
}

TEST_CASE("rational plus-part cells") {
    CHECK(rational_plus_cell(Side::C2, 0, 0) == 1);
    CHECK(rational_plus_cell(Side::C2, -2, 2) == 1);
    CHECK(rational_plus_cell(Side::C2, 2, -2) == 1);
    CHECK(rational_plus_cell(Side::C2, 1, 1) == 0);
    CHECK(rational_plus_cell(Side::C2, 0, 2) == 0);
    CHECK(rational_plus_cell(Side::C2, -1, 1) == 0);  // odd twist
    CHECK(rational_plus_cell(Side::Real, 0, 0) == 1);
    CHECK(rational_plus_cell(Side::Real, -2, 2) == 0);
    CHECK_THROWS_AS(rational_plus_cell(Side::Classical, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("nonzero plus-part cells avoid the two-primary region") {
    RationalRangeReport r = verify_rational_range(-20, 20, -20, 20);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    CHECK(r.origin_matches);
    // the diagonal cells (-2,2), (-4,4), ... are exactly what gets checked
    CHECK(r.checked == 10);
    // a grid missing the origin cannot confirm the origin match
    RationalRangeReport off = verify_rational_range(1, 5, 0, 5);
    CHECK_FALSE(off.origin_matches);
}
