#pragma once

#include <string>
#include <tuple>

namespace motivic {

// Bidegree m + n*a of the two-variable grading: m is the "plain" part,
// n the weight part.  Total degree m + n drives all Koszul signs.
struct Bidegree {
    int m = 0;
    int n = 0;

    int total() const { return m + n; }
    int weight() const { return n; }

    Bidegree operator+(Bidegree o) const { return {m + o.m, n + o.n}; }
    Bidegree operator-(Bidegree o) const { return {m - o.m, n - o.n}; }
    Bidegree operator-() const { return {-m, -n}; }
    Bidegree operator*(int c) const { return {c * m, c * n}; }

    bool operator==(Bidegree o) const { return m == o.m && n == o.n; }
    bool operator!=(Bidegree o) const { return !(*this == o); }
    bool operator<(Bidegree o) const {
        return std::tie(m, n) < std::tie(o.m, o.n);
    }

    std::string str() const {
        return std::to_string(m) + (n < 0 ? "" : "+") + std::to_string(n) + "a";
    }
};

// Cohomological filtration f on top of a Bidegree.
struct Tridegree {
    int f = 0;
    Bidegree deg;

    bool operator==(const Tridegree& o) const { return f == o.f && deg == o.deg; }
    bool operator<(const Tridegree& o) const {
        return std::tie(f, deg.m, deg.n) < std::tie(o.f, o.deg.m, o.deg.n);
    }

    std::string str() const { return "(" + std::to_string(f) + ", " + deg.str() + ")"; }
};

}  // namespace motivic
