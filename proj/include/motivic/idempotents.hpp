#pragma once

#include "motivic/ranges.hpp"

#include <map>
#include <string>
#include <vector>

namespace motivic {

// Exact dyadic rational num / 2^log_den, normalized so num is odd or zero.
struct Dyadic {
    long long num = 0;
    int log_den = 0;

    Dyadic() = default;
    Dyadic(long long n) : num(n) { normalize(); }
    Dyadic(long long n, int k) : num(n), log_den(k) { normalize(); }

    bool is_zero() const { return num == 0; }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic operator-() const { return Dyadic(-num, log_den); }
    bool operator==(const Dyadic& o) const {
        return num == o.num && log_den == o.log_den;
    }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
};

// Monomial rho^a eta^b.  Normal form has a = 0 or b <= 1: the relation
// rho eta^2 = -2 eta rewrites everything else downward.
struct MWMono {
    int rho = 0;
    int eta = 0;

    bool operator==(const MWMono& o) const { return rho == o.rho && eta == o.eta; }
    bool operator<(const MWMono& o) const {
        if (rho != o.rho) return rho < o.rho;
        return eta < o.eta;
    }
};

// Element of Z[1/2][rho, eta] / (rho eta^2 + 2 eta): normal-form monomials
// with dyadic coefficients, zeros dropped.
using MWElement = std::map<MWMono, Dyadic>;

// rho^a eta^b reduced to normal form (single term).
MWElement mw_mono(int a, int b, Dyadic coeff = Dyadic(1));
MWElement mw_const(Dyadic c);

MWElement mw_add(const MWElement& a, const MWElement& b);
MWElement mw_sub(const MWElement& a, const MWElement& b);
MWElement mw_scale(const MWElement& a, Dyadic c);
MWElement mw_multiply(const MWElement& a, const MWElement& b);
std::string mw_str(const MWElement& a);

// eps = -1 - rho eta
MWElement epsilon_element();
// (eps - 1)/2: squares to its own negative, annihilates eta
MWElement e_plus();
// (eps + 1)/2 = -(rho eta)/2: an honest idempotent
MWElement e_minus();
// (1 - eps)/2: the idempotent complementary to e_minus
MWElement plus_idempotent();

struct SplitIdentityReport {
    struct Item {
        std::string name;
        bool ok = false;
    };
    std::vector<Item> items;

    bool all_ok() const {
        for (const Item& i : items)
            if (!i.ok) return false;
        return true;
    }
};

// Checks the whole list of sign identities around eps, e_plus, e_minus,
// including the fact that (eps-1)/2 is NOT idempotent while (1-eps)/2 is.
SplitIdentityReport verify_split_identities();

struct SplitResult {
    int plus_rank = 0;   // rank of (1 - eps)/2 on the module
    int minus_rank = 0;  // rank of (1 + eps)/2
};

// Splits a free module over Z[1/2][eps]/(eps^2 - 1) into the eigenparts of
// the involution.  `eps_action` is the matrix of eps; throws unless it is
// square with eps_action^2 = identity.  plus_rank + minus_rank equals the
// module rank.
SplitResult split_module(const std::vector<std::vector<Rational>>& eps_action);

}  // namespace motivic
