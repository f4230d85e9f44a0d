#include "doctest.h"
#include "motivic/cobar.hpp"

using namespace motivic;

namespace {

// floor(a/b) for b > 0, correct for negative a
long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

CobarWord w1(const Monomial& a, int theta = 0) {
    CobarWord w;
    w.theta = theta;
    w.factors = {a};
    return w;
}

CobarWord w2(const Monomial& a, const Monomial& b, int theta = 0) {
    CobarWord w;
    w.theta = theta;
    w.factors = {a, b};
    return w;
}

}  // namespace

TEST_CASE("word bidegrees and rendering") {
    auto t0x1 = mono_multiply(3, tau_gen(0), xi_gen(1)).first;
    CobarWord w = w2(tau_gen(1), t0x1, -1);
    CHECK(word_bidegree(3, w) == Bidegree{6 - 2, 4 + 2});
    CHECK(w.filtration() == 2);
    CHECK(w.str() == "th^-1 [t1|t0 x1]");
    CHECK(CobarWord{}.str() == "1");
    CobarWord th;
    th.theta = 2;
    CHECK(th.str() == "th^2");
    CHECK(word_bidegree(5, th) == Bidegree{4, -4});
}

TEST_CASE("block word listings") {
    // f=0 is the coefficient row: a single empty word at t = l = 0
    CHECK(block_words(3, 0, 0, 0).size() == 1);
    CHECK(block_words(3, 0, 1, 0).empty());
    CHECK(block_words(3, 0, 0, 1).empty());

    // t=5, l=2 single letters: tau_1 and tau_0 xi_1
    auto& b1 = block_words(3, 1, 5, 2);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == w1(tau_gen(1)));
    CHECK(b1[1] == w1(mono_multiply(3, tau_gen(0), xi_gen(1)).first));

    // t=5, l=2 two-letter words: [t0|x1] and [x1|t0]
    auto& b2 = block_words(3, 2, 5, 2);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == w2(tau_gen(0), xi_gen(1)));
    CHECK(b2[1] == w2(xi_gen(1), tau_gen(0)));

    // more letters than total degree is impossible
    CHECK(block_words(3, 3, 2, 1).empty());
    // tau count is pinned to t - 2l
    for (const CobarWord& w : block_words(3, 2, 6, 2)) {
        int taus = 0;
        for (const Monomial& m : w.factors) taus += m.tau_count();
        CHECK(taus == 2);
    }
}

TEST_CASE("slice bases per side") {
    AlgebraParams real{3, Side::Real};
    AlgebraParams c2{3, Side::C2};

    auto b = cobar_basis(real, {1, {1, 0}});
    REQUIRE(b.size() == 1);
    CHECK(b[0] == w1(tau_gen(0)));

    CHECK(cobar_basis(real, {1, {-1, 2}}).empty());

    auto bc = cobar_basis(c2, {1, {-1, 2}});
    REQUIRE(bc.size() == 1);
    CHECK(bc[0] == w1(tau_gen(0), -1));

    // f = 0: theta powers only
    auto b0 = cobar_basis(real, {0, {2, -2}});
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].theta == 1);
    CHECK(b0[0].factors.empty());
    CHECK(cobar_basis(real, {0, {-2, 2}}).empty());
    CHECK(cobar_basis(c2, {0, {-2, 2}}).size() == 1);
    CHECK(cobar_basis({3, Side::Classical}, {0, {2, -2}}).empty());

    // the pinned two-element slice
    auto s = cobar_basis(real, {1, {3, 2}});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == w1(tau_gen(1)));
    CHECK(s[1] == w1(mono_multiply(3, tau_gen(0), xi_gen(1)).first));
}

TEST_CASE("every basis word is theta-normalized") {
    AlgebraParams c2{3, Side::C2};
    for (int f = 0; f <= 3; ++f) {
        for (int m = -4; m <= 8; ++m) {
            for (int n = -4; n <= 6; ++n) {
                for (const CobarWord& w : cobar_basis(c2, {f, {m, n}})) {
                    CHECK(w.filtration() == f);
                    CHECK(word_bidegree(3, w) == Bidegree{m, n});
                    for (const Monomial& mono : w.factors) {
                        CHECK(mono.theta == 0);
                        CHECK_FALSE(mono.is_unit());
                    }
                }
            }
        }
    }
}

TEST_CASE("differential of the first interesting slice") {
    AlgebraParams real{3, Side::Real};
    FpMatrix d = differential_matrix(real, {1, {3, 2}});
    REQUIRE(d.rows() == 2);
    REQUIRE(d.cols() == 2);
    // d[t1] = -[x1|t0]; d[t0 x1] = -[t0|x1] - [x1|t0]
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(1, 0) == 2);
    CHECK(d.at(0, 1) == 2);
    CHECK(d.at(1, 1) == 2);
}

TEST_CASE("primitives have zero differential") {
    AlgebraParams real{3, Side::Real};
    CHECK(differential_matrix(real, {1, {1, 0}}).is_zero());
    CHECK(differential_matrix(real, {1, {2, 2}}).is_zero());
    // the whole f = 0 row is primitive
    for (int j = -2; j <= 2; ++j) {
        AlgebraParams c2{3, Side::C2};
        CHECK(differential_matrix(c2, {0, {2 * j, -2 * j}}).is_zero());
    }
}

TEST_CASE("differential shapes line up with the bases") {
    AlgebraParams c2{3, Side::C2};
    for (int f = 0; f <= 3; ++f) {
        for (int m = -3; m <= 7; ++m) {
            for (int n = -3; n <= 5; ++n) {
                Tridegree t{f, {m, n}};
                FpMatrix d = differential_matrix(c2, t);
                CHECK(d.cols() == static_cast<int>(cobar_basis(c2, t).size()));
                CHECK(d.rows() ==
                      static_cast<int>(cobar_basis(c2, {f + 1, {m, n}}).size()));
            }
        }
    }
}

TEST_CASE("d squared vanishes on a window") {
    for (Side side : {Side::Classical, Side::Real, Side::C2}) {
        AlgebraParams params{3, side};
        for (int f = 0; f <= 3; ++f) {
            for (int m = -4; m <= 9; ++m) {
                for (int n = -4; n <= 7; ++n) {
                    FpMatrix d0 = differential_matrix(params, {f, {m, n}});
                    FpMatrix d1 = differential_matrix(params, {f + 1, {m, n}});
                    CHECK(multiply(d1, d0).is_zero());
                }
            }
        }
    }
}

TEST_CASE("d squared vanishes at p = 5 spot checks") {
    AlgebraParams real{5, Side::Real};
    for (int f = 1; f <= 2; ++f) {
        for (int m : {5, 9, 10, 13}) {
            for (int n : {4, 6, 8}) {
                FpMatrix d0 = differential_matrix(real, {f, {m, n}});
                FpMatrix d1 = differential_matrix(real, {f + 1, {m, n}});
                CHECK(multiply(d1, d0).is_zero());
            }
        }
    }
}

TEST_CASE("comparison map is the identity on shared words") {
    FpMatrix c = comparison_matrix(3, {1, {1, 0}});
    CHECK(c == FpMatrix::identity(3, 1));
    FpMatrix c0 = comparison_matrix(3, {0, {2, -2}});
    CHECK(c0 == FpMatrix::identity(3, 1));
    FpMatrix cm = comparison_matrix(3, {1, {-1, 2}});
    CHECK(cm.rows() == 1);
    CHECK(cm.cols() == 0);
}

TEST_CASE("comparison columns are distinct standard basis vectors") {
    for (int f = 0; f <= 2; ++f) {
        for (int m = -3; m <= 7; ++m) {
            for (int n = -3; n <= 5; ++n) {
                FpMatrix c = comparison_matrix(3, {f, {m, n}});
                REQUIRE(static_cast<int>(c.entries().size()) == c.cols());
                std::vector<bool> seen(c.rows(), false);
                int col = 0;
                for (const FpTriplet& e : c.entries()) {
                    CHECK(e.val == 1);
                    CHECK(e.col == col++);  // one entry per column, in order
                    CHECK_FALSE(seen[e.row]);
                    seen[e.row] = true;
                }
                CHECK(rank(c) == c.cols());
            }
        }
    }
}

TEST_CASE("comparison map commutes with the differential") {
    AlgebraParams real{3, Side::Real};
    AlgebraParams c2{3, Side::C2};
    for (int f = 0; f <= 2; ++f) {
        for (int m = -2; m <= 6; ++m) {
            for (int n = -2; n <= 4; ++n) {
                FpMatrix lhs = multiply(comparison_matrix(3, {f + 1, {m, n}}),
                                        differential_matrix(real, {f, {m, n}}));
                FpMatrix rhs = multiply(differential_matrix(c2, {f, {m, n}}),
                                        comparison_matrix(3, {f, {m, n}}));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("cokernel words are the negative theta powers") {
    auto ck = cokernel_basis(3, {1, {-1, 2}});
    REQUIRE(ck.size() == 1);
    CHECK(ck[0] == w1(tau_gen(0), -1));
    CHECK(cokernel_basis(3, {1, {1, 0}}).empty());
    CHECK(cokernel_basis(3, {0, {0, 0}}).empty());
}

TEST_CASE("theta-free words obey the filtration bound") {
    // bidegree m + na of a theta-free f-letter word: (p-1)m <= pn + (p-1)f
    for (Fp p : {Fp{3}, Fp{5}}) {
        for (int f = 1; f <= 3; ++f) {
            for (int t = f; t <= 14; ++t) {
                for (int l = 0; 2 * l <= t; ++l) {
                    for (const CobarWord& w : block_words(p, f, t, l)) {
                        Bidegree d = word_bidegree(p, w);
                        CHECK(static_cast<long long>(p - 1) * d.m <=
                              static_cast<long long>(p) * d.n +
                                  static_cast<long long>(p - 1) * f);
                    }
                }
            }
        }
    }
}

TEST_CASE("cokernel words obey the stronger theta bound") {
    // with theta^k pulled in: (p-1)m <= pn + (p-1)f - (4p-2) for every
    // cokernel word, hence the comparison is onto above the cut line
    Fp p = 3;
    for (int f = 0; f <= 3; ++f) {
        for (int m = -8; m <= 8; ++m) {
            for (int n = -6; n <= 8; ++n) {
                auto ck = cokernel_basis(p, {f, {m, n}});
                if (!ck.empty()) {
                    CHECK(static_cast<long long>(p - 1) * m <=
                          static_cast<long long>(p) * n +
                              static_cast<long long>(p - 1) * f - (4 * p - 2));
                }
                // contrapositive: above the line the map is onto
                long long cut =
                    floordiv(static_cast<long long>(p) * n - (4 * p - 2), p - 1) + 1;
                if (m - f >= cut) CHECK(ck.empty());
            }
        }
    }
}
