#pragma once

#include "motivic/bigraded.hpp"
#include "motivic/fplinalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace motivic {

// Which dual Steenrod algebra a computation runs over.  The three sides
// share generators and coproducts; they differ only in the allowed powers
// of the invertible-degree class theta:
//   Classical: no theta.  Real: theta^k, k >= 0.  C2: theta^k, k in Z.
enum class Side { Classical, Real, C2 };

const char* side_name(Side s);
bool theta_exp_allowed(Side side, int k);

struct AlgebraParams {
    Fp p = 3;
    Side side = Side::Real;
};

// Throws unless p is an odd prime in [3, 2^16).
void validate_prime(Fp p);

// Basis monomial theta^k * tau_{i1}...tau_{ir} * xi_1^{e1} xi_2^{e2} ...
// tau exponents are 0/1 (tau_i^2 = 0), stored as a bitmask.
// xis[j] is the exponent of xi_{j+1}; trailing zeros are trimmed so equal
// monomials have equal encodings.
struct Monomial {
    int theta = 0;
    std::uint64_t taus = 0;
    std::vector<int> xis;

    bool is_unit() const { return theta == 0 && taus == 0 && xis.empty(); }
    int tau_count() const;
    // Total-degree parity; taus are the only odd-degree generators.
    bool odd() const { return tau_count() & 1; }
    void trim();

    bool operator==(const Monomial& o) const {
        return theta == o.theta && taus == o.taus && xis == o.xis;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // Canonical order: theta ascending, tau mask numerically DESCENDING,
    // xi exponents lexicographically ascending.  Fixes every basis listing.
    bool operator<(const Monomial& o) const;

    std::string str() const;
};

Monomial tau_gen(int i);
Monomial xi_gen(int i, int e = 1);
Monomial theta_gen(int k = 1);

// p^e as long long; throws on overflow past 2^62.
long long ipow(long long p, int e);

Bidegree tau_bidegree(Fp p, int i);    // p^i + (p^i - 1)a
Bidegree xi_bidegree(Fp p, int i);     // (p^i - 1) + (p^i - 1)a, i >= 1
Bidegree theta_bidegree();             // 2 - 2a
Bidegree monomial_bidegree(Fp p, const Monomial& m);

// Weight of the theta-free part: (total - tau_count)/2.  Equals the weight
// the monomial would have with theta stripped.
int theta_free_weight(Fp p, const Monomial& m);

// Product of two basis monomials: a single monomial with coefficient in
// {0, 1, p-1}.  Zero when a tau index repeats; the sign counts tau
// transpositions needed to merge the two ascending tau lists.
std::pair<Monomial, Fp> mono_multiply(Fp p, const Monomial& a, const Monomial& b);

// Homogeneous element: monomial -> nonzero coefficient.
using Element = std::map<Monomial, Fp>;

void add_term(Element& e, const Monomial& m, Fp c, Fp p);
Element multiply(Fp p, const Element& a, const Element& b);

struct TensorTerm {
    Monomial left;
    Monomial right;

    bool operator==(const TensorTerm& o) const {
        return left == o.left && right == o.right;
    }
    bool operator<(const TensorTerm& o) const {
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
};

// Element of A (x) A with F_p coefficients.
using Tensor = std::map<TensorTerm, Fp>;

void add_tensor_term(Tensor& t, const Monomial& l, const Monomial& r, Fp c, Fp p);
// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd, parities by total degree.
Tensor tensor_multiply(Fp p, const Tensor& a, const Tensor& b);

// Full coproduct, extended multiplicatively from
//   psi(xi_n)  = sum_{i=0..n} xi_{n-i}^{p^i} (x) xi_i        (xi_0 = 1)
//   psi(tau_n) = tau_n (x) 1 + sum_{i=0..n} xi_{n-i}^{p^i} (x) tau_i
//   psi(theta) = theta (x) theta
// Memoized per (p, monomial); safe to call concurrently.
const Tensor& coproduct(Fp p, const Monomial& m);

// psi(m) - m (x) 1 - 1 (x) m.  For the unit this is minus the unit tensor;
// callers only ever use it on non-units, where it is the cobar insertion.
Tensor reduced_coproduct(Fp p, const Monomial& m);

// All theta-free monomials of total degree t in canonical order.
// Memoized per (p, t); safe to call concurrently.
const std::vector<Monomial>& theta_free_monomials(Fp p, int t);

// All monomials of the given side with bidegree exactly deg, canonical
// order.  The theta exponent is forced by the weight, so this reduces to
// the theta-free listing at total degree deg.total().
std::vector<Monomial> enumerate_monomials(const AlgebraParams& params, Bidegree deg);

// Generator-wise inclusion of the Real side into the C2 side: identity on
// theta, tau_i, xi_i, hence on every monomial.  Exists to make the
// comparison map explicit where it matters.
inline Monomial realize(const Monomial& m) { return m; }

}  // namespace motivic
