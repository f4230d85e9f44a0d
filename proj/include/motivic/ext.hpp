#pragma once

#include "motivic/cobar.hpp"

#include <map>
#include <string>
#include <vector>

namespace motivic {

// Homology of the theta-free block complex at (f, t, l), shared across
// sides.  Memoized; thread-safe.  This is the classical computation: the
// dimension at (f, t, l) is dim Ext over the classical dual algebra in
// filtration f, bidegree (t - l) + l*a.
const Subquotient& block_homology(Fp p, int f, int t, int l);

// Homology of the assembled slice complex at one tridegree, computed from
// the full differential matrices (not from the block decomposition; the
// block route is the independent cross-check).  Memoized; thread-safe.
const Subquotient& ext_subquotient(const AlgebraParams& params, Tridegree t);

struct ExtCell {
    Tridegree tri;
    std::vector<CobarWord> ambient;  // slice basis the coordinates refer to
    std::vector<FpVec> basis;        // cocycle representatives per class

    int dimension() const { return static_cast<int>(basis.size()); }
    // Renders representative i as a combination of basis words.
    std::string class_str(int i) const;
};

ExtCell ext_cell(const AlgebraParams& params, Tridegree t);

enum class Verdict { Iso, InjectionNotSurjection, NotInjective, Zero };

const char* verdict_name(Verdict v);
// Pure function of the three numbers: iso when bijective, injection when
// full column rank only, zero when the map vanishes on a nonzero source,
// not-injective otherwise.
Verdict classify_map(int source_dim, int target_dim, int map_rank);

struct ComparisonCell {
    Tridegree tri;
    int source_dim = 0;
    int target_dim = 0;
    int map_rank = 0;
    Verdict verdict = Verdict::Iso;
};

// Map induced on homology by the Real -> C2 inclusion at one tridegree.
// Throws if the inclusion fails to be a chain map there (it never does;
// the check is the point).
ComparisonCell ext_comparison(Fp p, Tridegree t);

// Dimension at t predicted by the coefficient decomposition: the sum of
// classical block dimensions over the theta-shifted weights legal for the
// side.  Real sums l = deg.n, deg.n + 2, ...; C2 sums both directions.
// Classical is not a valid side here.
int uct_oracle(Fp p, Side side, Tridegree t);

struct Window {
    int max_f = 0;
    int max_total = 0;
    int min_weight = 0;
    int max_weight = 0;
};

struct ExtChart {
    AlgebraParams params;
    Window window;
    std::map<Tridegree, ExtCell> cells;  // every tridegree in the window
};

// All cells with f in [0, max_f], total degree in [0, max_total], weight
// in [min_weight, max_weight].  Cell computations run on `jobs` threads;
// the result is byte-identical regardless of the thread count.
ExtChart chart(const AlgebraParams& params, const Window& window, int jobs = 1);

}  // namespace motivic
