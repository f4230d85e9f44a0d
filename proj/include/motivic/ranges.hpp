#pragma once

#include "motivic/steenrod.hpp"

#include <string>
#include <vector>

namespace motivic {

// Exact rational number, normalized so den > 0 and gcd(num, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    std::string str() const;
};

// floor(a/b) for b > 0, correct for negative numerators
long long floordiv(long long a, long long b);
long long floor_of(const Rational& r);

// floor((p*n - (4p-2)) / (p-1)): the filtration-1 cut line; the comparison
// map is an isomorphism for m - f strictly above it and injective on it.
long long odd_p_bound(Fp p, long long n);

// Region of the (m, n) plane cut out by exact inequalities.
class RangePredicate {
  public:
    // a*m + b*n >= c
    static RangePredicate half_plane(Rational a, Rational b, Rational c);
    // m >= odd_p_bound(p, n) + delta
    static RangePredicate floor_bound(Fp p, long long delta);
    static RangePredicate intersection(std::vector<RangePredicate> parts);

    bool contains(long long m, long long n) const;

  private:
    enum class Kind { Half, Floor, Inter };
    RangePredicate(Kind k) : kind_(k) {}

    Kind kind_;
    Rational a_, b_, c_;
    Fp p_ = 3;
    long long delta_ = 0;
    std::vector<RangePredicate> parts_;
};

// {m >= 2n-5}: the 2-primary isomorphism region.
RangePredicate di_region();
// {m >= 2n-5 and n >= 0}.
RangePredicate betti_region();
// The 2-primary injection boundary line m = 2n-6.
bool di_injection_line(long long m, long long n);

// Containment of the 2-primary region in the odd-p region, weight by
// weight.  Where containment fails the offending cells are the strip
// m in [2n-5, cut-1] at that weight.
struct DominationReport {
    struct Exception {
        long long n = 0;
        long long m_lo = 0;  // 2n-5
        long long m_hi = 0;  // odd-p cut minus one
    };
    Fp p = 3;
    long long n_min = 0;
    long long n_max = 0;
    std::vector<Exception> exceptions;
    // every exceptional cell has total stem m + n < 0
    bool exceptions_negative_stem = true;

    bool contained() const { return exceptions.empty(); }
};

DominationReport check_domination(Fp p, long long n_min, long long n_max);

// Dimension over Q of the rational plus-part in stem grading i + j*(twist):
// C2 side 1 iff j is even and i + j = 0; Real side 1 iff (i, j) = (0, 0).
int rational_plus_cell(Side side, long long i, long long j);

struct RationalRangeReport {
    long long checked = 0;
    // nonzero off-origin C2 cells with j >= 0 that land INSIDE {i >= 2j-5}
    std::vector<std::pair<long long, long long>> violations;
    bool origin_matches = false;

    bool ok() const { return violations.empty() && origin_matches; }
};

// Confirms the two facts the rational comparison consumes: nonzero
// off-origin plus-part cells in j >= 0 avoid the region {i >= 2j-5}, and
// the two sides agree at the origin.
RationalRangeReport verify_rational_range(long long i_min, long long i_max,
                                          long long j_min, long long j_max);

}  // namespace motivic
