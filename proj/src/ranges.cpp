#include "motivic/ranges.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motivic {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

std::string Rational::str() const {
    std::ostringstream out;
    out << num;
    if (den != 1) out << "/" << den;
    return out.str();
}

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long floor_of(const Rational& r) { return floordiv(r.num, r.den); }

long long odd_p_bound(Fp p, long long n) {
    long long pp = static_cast<long long>(p);
    return floordiv(pp * n - (4 * pp - 2), pp - 1);
}

RangePredicate RangePredicate::half_plane(Rational a, Rational b, Rational c) {
    RangePredicate r(Kind::Half);
    r.a_ = a;
    r.b_ = b;
    r.c_ = c;
    return r;
}

RangePredicate RangePredicate::floor_bound(Fp p, long long delta) {
    RangePredicate r(Kind::Floor);
    r.p_ = p;
    r.delta_ = delta;
    return r;
}

RangePredicate RangePredicate::intersection(std::vector<RangePredicate> parts) {
    RangePredicate r(Kind::Inter);
    r.parts_ = std::move(parts);
    return r;
}

bool RangePredicate::contains(long long m, long long n) const {
    switch (kind_) {
        case Kind::Half: {
            Rational lhs = a_ * Rational(m) + b_ * Rational(n);
            return c_ <= lhs;
        }
        case Kind::Floor:
            return m >= odd_p_bound(p_, n) + delta_;
        case Kind::Inter:
            for (const RangePredicate& part : parts_)
                if (!part.contains(m, n)) return false;
            return true;
    }
    return false;
}

RangePredicate di_region() {
    return RangePredicate::half_plane(Rational(1), Rational(-2), Rational(-5));
}

RangePredicate betti_region() {
    return RangePredicate::intersection(
        {di_region(), RangePredicate::half_plane(Rational(0), Rational(1), Rational(0))});
}

bool di_injection_line(long long m, long long n) { return m == 2 * n - 6; }

DominationReport check_domination(Fp p, long long n_min, long long n_max) {
    DominationReport report;
    report.p = p;
    report.n_min = n_min;
    report.n_max = n_max;
    for (long long n = n_min; n <= n_max; ++n) {
        long long two_primary = 2 * n - 5;
        long long odd_cut = odd_p_bound(p, n) + 1;
        if (two_primary >= odd_cut) continue;
        DominationReport::Exception ex;
        ex.n = n;
        ex.m_lo = two_primary;
        ex.m_hi = odd_cut - 1;
        if (ex.m_hi + n >= 0) report.exceptions_negative_stem = false;
        report.exceptions.push_back(ex);
    }
    return report;
}

int rational_plus_cell(Side side, long long i, long long j) {
    switch (side) {
        case Side::C2:
            return (j % 2 == 0 && i + j == 0) ? 1 : 0;
        case Side::Real:
            return (i == 0 && j == 0) ? 1 : 0;
        case Side::Classical:
            break;
    }
    throw std::invalid_argument("rational_plus_cell: side must be Real or C2");
}

RationalRangeReport verify_rational_range(long long i_min, long long i_max,
                                          long long j_min, long long j_max) {
    RationalRangeReport report;
    RangePredicate region = di_region();
    for (long long j = std::max(j_min, 0ll); j <= j_max; ++j) {
        for (long long i = i_min; i <= i_max; ++i) {
            if (i == 0 && j == 0) continue;
            if (rational_plus_cell(Side::C2, i, j) == 0) continue;
            ++report.checked;
            if (region.contains(i, j)) report.violations.push_back({i, j});
        }
    }
    bool origin_in_grid =
        i_min <= 0 && 0 <= i_max && j_min <= 0 && 0 <= j_max;
    report.origin_matches =
        origin_in_grid && rational_plus_cell(Side::C2, 0, 0) == 1 &&
        rational_plus_cell(Side::Real, 0, 0) == 1;
    return report;
}

}  // namespace motivic
