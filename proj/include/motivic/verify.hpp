#pragma once

#include "motivic/ext.hpp"
#include "motivic/ranges.hpp"

#include <string>
#include <utility>
#include <vector>

namespace motivic {

struct ClaimResult {
    std::string id;
    bool pass = false;
    // failure details, or an informational note on a passing claim
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ClaimResult> claims;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }

    std::string json() const;
    std::string text() const;
};

// Every theta-free monomial of total degree <= max_total satisfies
// k <= (p/(p-1)) l + 1 in bidegree k + l*a, with equality only at t0 and
// t0 t1.  Exact rational arithmetic.
VerificationReport verify_lemma_coarse(Fp p, int max_total);

// Composites of consecutive cobar differentials vanish on every tridegree
// in the window.
VerificationReport verify_cobar_d2(const AlgebraParams& params, int max_f, int max_total,
                                   int min_weight, int max_weight);

// The Real -> C2 comparison is a chain map and injective on every cell in
// the window, and each cokernel word obeys the shifted degree bound.
VerificationReport verify_cobar_map(Fp p, int max_f, int max_total, int min_weight,
                                    int max_weight);

// Verdicts in the window: isomorphism strictly above the cut line
// m - f = odd_p_bound(p, n), injectivity on it.
VerificationReport verify_ext_map(Fp p, int max_f, int max_total, int min_weight,
                                  int max_weight);

// Direct Ext dimension equals the theta-shifted sum of classical block
// dimensions on every cell in the window.  Side must be Real or C2.
VerificationReport verify_uct(const AlgebraParams& params, int max_f, int max_total,
                              int min_weight, int max_weight);

// Betti-range arithmetic: domination of the odd-primary cut by the
// two-primary line for all odd primes <= max_prime and 1 <= n <= max_n,
// the single exceptional cell at n = 0, and the rational plus-part grid.
VerificationReport verify_ranges(Fp max_prime, long long max_n, long long grid);

// The sign identities around eps, e_plus, e_minus, with the e_plus square
// reported as a note, plus eigenpart rank accounting on sample modules.
VerificationReport verify_split();

}  // namespace motivic
