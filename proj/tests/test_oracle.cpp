#include "motivic/oracle.hpp"

#include <stdexcept>

#include "doctest.h"
#include "motivic/ext.hpp"

using namespace motivic;

TEST_CASE("oracle enumeration matches pinned values") {
    OracleConfig cfg;
    std::vector<Monomial> got = oracle_enumerate(cfg, {3, 2});
    REQUIRE(got.size() == 2);
    CHECK(got[0] == tau_gen(1));
    Monomial t0x1 = tau_gen(0);
    t0x1.xis = {1};
    CHECK(got[1] == t0x1);

    CHECK(oracle_enumerate(cfg, {2, 0}).empty());
    CHECK(oracle_enumerate(cfg, {-1, 2}).empty());

    OracleConfig c2 = cfg;
    c2.side = Side::C2;
    std::vector<Monomial> inverse = oracle_enumerate(c2, {-2, 2});
    REQUIRE(inverse.size() == 1);
    CHECK(inverse[0] == theta_gen(-1));
}

TEST_CASE("oracle refuses degrees beyond its cutoffs") {
    OracleConfig cfg;
    cfg.max_total = 4;
    cfg.max_weight = 4;
    CHECK_THROWS_AS(oracle_enumerate(cfg, {3, 2}), std::domain_error);
    CHECK_THROWS_AS(oracle_enumerate(cfg, {10, -6}), std::domain_error);
    CHECK_THROWS_AS(oracle_differential(cfg, 1, {6, 2}), std::domain_error);
    CHECK_THROWS_AS(oracle_homology_dim(cfg, 1, {3, 3}), std::domain_error);
    CHECK_THROWS_AS(oracle_homology_dim(cfg, -1, {0, 0}), std::invalid_argument);
}

TEST_CASE("oracle and main enumeration agree on a window") {
    for (Side side : {Side::Classical, Side::Real, Side::C2}) {
        OracleConfig cfg;
        cfg.side = side;
        cfg.max_total = 12;
        cfg.max_weight = 8;
        AlgebraParams params{3, side};
        for (int m = -6; m <= 10; ++m)
            for (int n = -8; n <= 8; ++n) {
                if (m + n > 12) continue;
                CHECK(oracle_enumerate(cfg, {m, n}) == enumerate_monomials(params, {m, n}));
            }
    }
}

TEST_CASE("oracle and main differentials agree entrywise") {
    for (Side side : {Side::Real, Side::C2}) {
        OracleConfig cfg;
        cfg.side = side;
        cfg.max_total = 10;
        cfg.max_weight = 8;
        AlgebraParams params{3, side};
        for (int f = 1; f <= 3; ++f)
            for (int m = -4; m <= 9; ++m)
                for (int n = -6; n <= 6; ++n) {
                    if (m + n < 0 || m + n > 10) continue;
                    FpMatrix want = differential_matrix(params, {f, {m, n}});
                    FpMatrix got = oracle_differential(cfg, f, {m, n});
                    CHECK(got == want);
                }
    }
}

TEST_CASE("oracle homology on the unnormalized complex matches pinned cells") {
    OracleConfig cfg;
    CHECK(oracle_homology_dim(cfg, 1, {1, 0}) == 1);   // the class of [t0]
    CHECK(oracle_homology_dim(cfg, 0, {0, 0}) == 1);   // the unit
    CHECK(oracle_homology_dim(cfg, 0, {2, -2}) == 1);  // the coefficient theta
    CHECK(oracle_homology_dim(cfg, 0, {1, 0}) == 0);
    CHECK(oracle_homology_dim(cfg, 1, {2, 2}) == 1);   // the class of [x1]
    CHECK(oracle_homology_dim(cfg, 1, {4, 4}) == 0);   // [x1^2] is not a cycle
    CHECK(oracle_homology_dim(cfg, 1, {3, 2}) == 0);   // d[t1] kills both words
}

TEST_CASE("oracle and main homology dimensions agree on a window") {
    for (Side side : {Side::Real, Side::C2}) {
        OracleConfig cfg;
        cfg.side = side;
        cfg.max_total = 10;
        cfg.max_weight = 8;
        AlgebraParams params{3, side};
        for (int f = 0; f <= 3; ++f)
            for (int m = -4; m <= 9; ++m)
                for (int n = -6; n <= 6; ++n) {
                    if (m + n < 0 || m + n > 10) continue;
                    ExtCell cell = ext_cell(params, {f, {m, n}});
                    CHECK(oracle_homology_dim(cfg, f, {m, n}) == cell.dimension());
                }
    }
}
