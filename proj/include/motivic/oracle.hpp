#pragma once

#include "motivic/cobar.hpp"

#include <vector>

namespace motivic {

// Brute-force reference implementations, test-only.  They share container
// types with the main path so results can be compared, but none of the
// enumeration, coproduct, sign, or elimination code.
struct OracleConfig {
    int p = 3;
    Side side = Side::Real;
    // Requests beyond these bounds throw instead of silently truncating.
    int max_total = 20;
    int max_weight = 20;
};

// All monomials of the given bidegree, canonically sorted.  Found by plain
// depth-first search over generator exponents with the theta power solved
// for last.
std::vector<Monomial> oracle_enumerate(const OracleConfig& cfg, Bidegree deg);

// Matrix of the cobar differential on unit-free words, rows and columns in
// canonical order.  Entries come from full coproducts with the words that
// acquire a unit letter discarded afterwards; signs alternate per position.
FpMatrix oracle_differential(const OracleConfig& cfg, int f, Bidegree deg);

// Homology dimension in filtration f of the unnormalized complex, whose
// words may contain unit letters and whose differential is the alternating
// sum of all f+2 coface maps.  Agrees with the unit-free complex.
int oracle_homology_dim(const OracleConfig& cfg, int f, Bidegree deg);

}  // namespace motivic
