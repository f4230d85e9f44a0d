#pragma once

#include "motivic/bigraded.hpp"
#include "motivic/fplinalg.hpp"
#include "motivic/steenrod.hpp"

#include <string>
#include <vector>

namespace motivic {

// Basis word theta^k [a_1 | ... | a_f] of the reduced cobar complex.
// Letters are theta-free non-unit monomials; every theta power is pulled
// out to the word level (tensors are taken over the coefficient ring, so
// theta slides freely across bars).  f = 0 words are bare theta powers.
struct CobarWord {
    int theta = 0;
    std::vector<Monomial> factors;

    int filtration() const { return static_cast<int>(factors.size()); }

    bool operator==(const CobarWord& o) const {
        return theta == o.theta && factors == o.factors;
    }
    bool operator!=(const CobarWord& o) const { return !(*this == o); }
    bool operator<(const CobarWord& o) const {
        if (theta != o.theta) return theta < o.theta;
        return factors < o.factors;
    }

    std::string str() const;
};

Bidegree word_bidegree(Fp p, const CobarWord& w);

// Theta-free words with f letters, total degree t and weight l, in
// canonical order (factor sequences compared letterwise).  The theta-free
// weight pins the total tau count to t - 2l.  Memoized; thread-safe.
const std::vector<CobarWord>& block_words(Fp p, int f, int t, int l);

// Matrix of d : block(f) -> block(f+1) over the block bases, where
//   d[a_1|...|a_f] = sum_{i=1..f} (-1)^i [a_1|...|psi_bar(a_i)|...|a_f].
// The unit-sided coproduct terms cancel pairwise against the two outer
// unit insertions of the full coface sum, so this IS the alternating
// coface differential restricted to words of non-units; d*d = 0 follows
// from coassociativity and is also checked wholesale by the test suites.
// Memoized; thread-safe.
const FpMatrix& block_differential(Fp p, int f, int t, int l);

// One theta-free block of a tridegree slice: weight l, produced theta
// power k = (l - deg.n)/2.
struct SliceBlock {
    int l = 0;
    int theta = 0;
};

// Blocks contributing to the slice at t, ascending in l (hence in theta).
// Covers every l in [0, total/2] with l = deg.n (mod 2) whose theta power
// is legal on the side; blocks may be empty.
std::vector<SliceBlock> slice_blocks(const AlgebraParams& params, Tridegree t);

// Full ordered basis of the filtration-f part of the complex in one
// bidegree: blocks concatenated in ascending l, theta set per block.
std::vector<CobarWord> cobar_basis(const AlgebraParams& params, Tridegree t);

// Differential on the whole slice, block-diagonal over slice_blocks.
// Columns follow cobar_basis(t), rows cobar_basis at filtration f+1.
FpMatrix differential_matrix(const AlgebraParams& params, Tridegree t);

// Matrix of the Real -> C2 inclusion in the two canonical bases: every
// Real word maps to itself, so columns are distinct standard basis vectors.
FpMatrix comparison_matrix(Fp p, Tridegree t);

// C2 basis words outside the image of the comparison map: exactly the
// words with negative theta exponent.
std::vector<CobarWord> cokernel_basis(Fp p, Tridegree t);

}  // namespace motivic
