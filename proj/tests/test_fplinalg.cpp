#include "doctest.h"
#include "motivic/fplinalg.hpp"

#include <stdexcept>

using namespace motivic;

TEST_CASE("prime field scalar ops") {
    CHECK(fp_add(2, 2, 3) == 1);
    CHECK(fp_sub(0, 1, 3) == 2);
    CHECK(fp_neg(0, 5) == 0);
    CHECK(fp_mul(4, 4, 5) == 1);
    CHECK(fp_inv(2, 3) == 2);
    CHECK(fp_inv(96, 97) == 96);
    for (Fp a = 1; a < 13; ++a) CHECK(fp_mul(a, fp_inv(a, 13), 13) == 1);
    CHECK(fp_from(-1, 3) == 2);
    CHECK(fp_from(-6, 3) == 0);
    CHECK(fp_from(7, 5) == 2);
    CHECK_THROWS_AS(fp_inv(0, 5), std::invalid_argument);
}

TEST_CASE("matrix construction canonicalizes triplets") {
    // duplicates merge mod p, zeros drop, order is row-major
    auto m = FpMatrix::from_triplets(3, 2, 2, {{1, 0, 2}, {0, 1, 1}, {1, 0, 1}, {0, 0, 3}});
    CHECK(m.entries().size() == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(0, 0) == 0);
    CHECK_THROWS_AS(FpMatrix::from_triplets(3, 1, 1, {{0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("matrix apply, transpose, multiply") {
    auto m = FpMatrix::from_triplets(5, 2, 3, {{0, 0, 1}, {0, 2, 4}, {1, 1, 2}});
    CHECK(m.apply({1, 1, 1}) == FpVec{0, 2});
    auto t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.at(2, 0) == 4);
    CHECK(t.transpose() == m);

    auto id = FpMatrix::identity(5, 3);
    CHECK(multiply(m, id) == m);
    auto z = multiply(m, FpMatrix(5, 3, 4));
    CHECK(z.is_zero());
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 4);
    CHECK_THROWS_AS(multiply(m, m), std::invalid_argument);
}

TEST_CASE("rank and kernel of [[1,2],[2,4]] mod 3") {
    auto m = FpMatrix::from_triplets(3, 2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}});
    CHECK(rank(m) == 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == FpVec{1, 1});
    auto im = image_basis(m);
    REQUIRE(im.size() == 1);
    CHECK(im[0] == FpVec{1, 2});
}

TEST_CASE("rref produces the reduced echelon form") {
    // [[0,2,1],[1,1,0],[1,0,1]] mod 3 has rank 2: row2 = row1 + 2*row0
    Echelon e = rref(3, 3, {{0, 2, 1}, {1, 1, 0}, {1, 0, 1}});
    REQUIRE(e.rows.size() == 2);
    CHECK(e.pivot_cols == std::vector<int>{0, 1});
    CHECK(e.rows[0] == FpVec{1, 0, 1});
    CHECK(e.rows[1] == FpVec{0, 1, 2});
    // already-reduced input is a fixed point
    Echelon e2 = rref(3, 3, e.rows);
    CHECK(e2.rows == e.rows);
    CHECK(e2.pivot_cols == e.pivot_cols);
}

TEST_CASE("sparse and dense elimination agree") {
    // 70 columns forces the sparse path; embedding in fewer columns would not.
    // Same rows truncated to the nonzero support go through the dense path.
    const int wide = 70, narrow = 9;
    std::vector<FpVec> rows_w, rows_n;
    for (int i = 0; i < 6; ++i) {
        FpVec w(wide, 0), n(narrow, 0);
        for (int j = 0; j < narrow; ++j) {
            Fp v = static_cast<Fp>((i * 7 + j * j + (i + 1) * j) % 5);
            w[j] = v;
            n[j] = v;
        }
        rows_w.push_back(w);
        rows_n.push_back(n);
    }
    Echelon ew = rref(5, wide, rows_w);
    Echelon en = rref(5, narrow, rows_n);
    REQUIRE(ew.rows.size() == en.rows.size());
    CHECK(ew.pivot_cols == en.pivot_cols);
    for (size_t i = 0; i < ew.rows.size(); ++i)
        for (int j = 0; j < narrow; ++j) CHECK(ew.rows[i][j] == en.rows[i][j]);
}

TEST_CASE("rank is invariant under transpose") {
    auto m = FpMatrix::from_triplets(
        7, 4, 5, {{0, 0, 1}, {0, 3, 2}, {1, 1, 3}, {2, 0, 5}, {2, 3, 3}, {3, 4, 6}});
    CHECK(rank(m) == rank(m.transpose()));
}

TEST_CASE("homology of a two-step complex") {
    // d_in: F_3 -> F_3^3, e -> (1,1,0);  d_out: F_3^3 -> F_3, (x,y,z) -> x - y
    auto d_in = FpMatrix::from_triplets(3, 3, 1, {{0, 0, 1}, {1, 0, 1}});
    auto d_out = FpMatrix::from_triplets(3, 1, 3, {{0, 0, 1}, {0, 1, 2}});
    Subquotient h = homology(d_out, d_in);
    CHECK(h.dim() == 1);
    CHECK(h.ambient_dim() == 3);
    // (0,0,1) spans the quotient; (1,1,0) is a boundary
    CHECK(h.contains_cycle({0, 0, 1}));
    CHECK(h.is_boundary({1, 1, 0}));
    CHECK(h.is_boundary({2, 2, 0}));
    CHECK_FALSE(h.is_boundary({0, 0, 1}));
    CHECK_FALSE(h.contains_cycle({1, 0, 0}));
    auto coords = h.rep_coords({1, 1, 2});
    REQUIRE(coords.has_value());
    CHECK(*coords == FpVec{2});
    CHECK_FALSE(h.rep_coords({1, 0, 0}).has_value());
}

TEST_CASE("homology rejects malformed complexes") {
    auto a = FpMatrix::from_triplets(3, 2, 2, {{0, 0, 1}});
    auto b = FpMatrix::from_triplets(3, 2, 2, {{0, 0, 1}});
    CHECK_THROWS_AS(homology(a, b), std::runtime_error);  // d*d != 0
    auto c = FpMatrix(3, 3, 2);
    CHECK_THROWS_AS(homology(a, c), std::invalid_argument);  // shapes
    auto q = FpMatrix(5, 2, 2);
    CHECK_THROWS_AS(homology(a, q), std::invalid_argument);  // primes
}

TEST_CASE("zero differentials give the full space") {
    Subquotient h = homology(FpMatrix(3, 0, 4), FpMatrix(3, 4, 0));
    CHECK(h.dim() == 4);
    for (int i = 0; i < 4; ++i) {
        FpVec v(4, 0);
        v[i] = 1;
        CHECK(h.reps()[i] == v);
    }
}

TEST_CASE("induced map extracts quotient coordinates") {
    // H of (0 <- F_3^2 <- 0) mapped by the identity and by a swap
    Subquotient h = homology(FpMatrix(3, 0, 2), FpMatrix(3, 2, 0));
    auto id = induced_map(h, h, FpMatrix::identity(3, 2));
    CHECK(id == FpMatrix::identity(3, 2));
    auto swap_map = FpMatrix::from_triplets(3, 2, 2, {{0, 1, 1}, {1, 0, 1}});
    auto sw = induced_map(h, h, swap_map);
    CHECK(sw.at(0, 1) == 1);
    CHECK(sw.at(1, 0) == 1);
    CHECK(sw.at(0, 0) == 0);
}

TEST_CASE("induced map enforces chain-map preconditions") {
    // src: cycles = span{(1,0)}, no boundaries, inside F_3^2
    Subquotient src(3, 2, {{1, 0}}, {});
    Subquotient dst = homology(
        FpMatrix::from_triplets(3, 1, 2, {{0, 1, 1}}),  // kills y
        FpMatrix(3, 2, 0));
    // maps (1,0) to (0,1), which is not a cycle downstairs
    auto bad = FpMatrix::from_triplets(3, 2, 2, {{1, 0, 1}});
    CHECK_THROWS_AS(induced_map(src, dst, bad), std::runtime_error);
    auto good = FpMatrix::from_triplets(3, 2, 2, {{0, 0, 1}});
    auto f = induced_map(src, dst, good);
    CHECK(f == FpMatrix::identity(3, 1));
}

TEST_CASE("boundary rows must lie inside the cycle span") {
    CHECK_THROWS_AS(Subquotient(3, 2, {{1, 0}}, {{0, 1}}), std::runtime_error);
}

TEST_CASE("direct sum concatenates blocks in order") {
    Subquotient a = homology(FpMatrix(3, 0, 1), FpMatrix(3, 1, 0));
    Subquotient b = homology(
        FpMatrix(3, 0, 2),
        FpMatrix::from_triplets(3, 2, 1, {{0, 0, 1}, {1, 0, 1}}));
    CHECK(a.dim() == 1);
    CHECK(b.dim() == 1);
    Subquotient s = Subquotient::direct_sum(3, {&a, &b});
    CHECK(s.ambient_dim() == 3);
    CHECK(s.dim() == 2);
    CHECK(s.reps()[0] == FpVec{1, 0, 0});
    CHECK(s.is_boundary({0, 1, 1}));
    auto coords = s.rep_coords({2, 1, 1});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == 0);
}
