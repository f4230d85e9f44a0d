#include "motivic/idempotents.hpp"

#include <sstream>
#include <stdexcept>

namespace motivic {

void Dyadic::normalize() {
    if (log_den < 0) throw std::invalid_argument("Dyadic: negative denominator exponent");
    if (num == 0) {
        log_den = 0;
        return;
    }
    while (log_den > 0 && num % 2 == 0) {
        num /= 2;
        --log_den;
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    int k = std::max(log_den, o.log_den);
    long long a = num << (k - log_den);
    long long b = o.num << (k - o.log_den);
    return Dyadic(a + b, k);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num * o.num, log_den + o.log_den);
}

std::string Dyadic::str() const {
    std::ostringstream out;
    out << num;
    if (log_den > 0) out << "/" << (1LL << log_den);
    return out.str();
}

namespace {

void mw_accumulate(MWElement& acc, MWMono m, Dyadic c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

MWElement mw_mono(int a, int b, Dyadic coeff) {
    if (a < 0 || b < 0) throw std::invalid_argument("mw_mono: negative exponent");
    // rho^a eta^b with a >= 1 and b >= 2 rewrites to -2 rho^(a-1) eta^(b-1).
    while (a >= 1 && b >= 2) {
        coeff = coeff * Dyadic(-2);
        --a;
        --b;
    }
    MWElement out;
    mw_accumulate(out, MWMono{a, b}, coeff);
    return out;
}

MWElement mw_const(Dyadic c) { return mw_mono(0, 0, c); }

MWElement mw_add(const MWElement& a, const MWElement& b) {
    MWElement out = a;
    for (const auto& [m, c] : b) mw_accumulate(out, m, c);
    return out;
}

MWElement mw_sub(const MWElement& a, const MWElement& b) {
    MWElement out = a;
    for (const auto& [m, c] : b) mw_accumulate(out, m, -c);
    return out;
}

MWElement mw_scale(const MWElement& a, Dyadic c) {
    MWElement out;
    for (const auto& [m, x] : a) mw_accumulate(out, m, x * c);
    return out;
}

MWElement mw_multiply(const MWElement& a, const MWElement& b) {
    MWElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            MWElement term = mw_mono(ma.rho + mb.rho, ma.eta + mb.eta, ca * cb);
            for (const auto& [m, c] : term) mw_accumulate(out, m, c);
        }
    return out;
}

std::string mw_str(const MWElement& a) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : a) {
        if (!first) out << " + ";
        first = false;
        if (m.rho == 0 && m.eta == 0) {
            out << c.str();
            continue;
        }
        if (c != Dyadic(1)) out << c.str() << "*";
        bool dot = false;
        if (m.rho > 0) {
            out << "rho";
            if (m.rho > 1) out << "^" << m.rho;
            dot = true;
        }
        if (m.eta > 0) {
            if (dot) out << " ";
            out << "eta";
            if (m.eta > 1) out << "^" << m.eta;
        }
    }
    return out.str();
}

MWElement epsilon_element() {
    return mw_sub(mw_const(Dyadic(-1)), mw_mono(1, 1));
}

MWElement e_plus() {
    MWElement shifted = mw_sub(epsilon_element(), mw_const(Dyadic(1)));
    return mw_scale(shifted, Dyadic(1, 1));
}

MWElement e_minus() {
    MWElement shifted = mw_add(epsilon_element(), mw_const(Dyadic(1)));
    return mw_scale(shifted, Dyadic(1, 1));
}

MWElement plus_idempotent() {
    MWElement shifted = mw_sub(mw_const(Dyadic(1)), epsilon_element());
    return mw_scale(shifted, Dyadic(1, 1));
}

SplitIdentityReport verify_split_identities() {
    const MWElement eps = epsilon_element();
    const MWElement ep = e_plus();
    const MWElement em = e_minus();
    const MWElement h = plus_idempotent();
    const MWElement one = mw_const(Dyadic(1));
    const MWElement eta = mw_mono(0, 1);

    SplitIdentityReport rep;
    auto check = [&rep](std::string name, const MWElement& lhs, const MWElement& rhs) {
        rep.items.push_back({std::move(name), lhs == rhs});
    };

    check("eps^2 = 1", mw_multiply(eps, eps), one);
    check("e_minus = -(rho eta)/2", em, mw_mono(1, 1, Dyadic(-1, 1)));
    check("e_minus^2 = e_minus", mw_multiply(em, em), em);
    check("e_plus * e_minus = 0", mw_multiply(ep, em), MWElement{});
    check("e_plus * eta = 0", mw_multiply(ep, eta), MWElement{});
    check("eps * eta = eta", mw_multiply(eps, eta), eta);
    check("e_plus^2 = -e_plus", mw_multiply(ep, ep), mw_scale(ep, Dyadic(-1)));
    check("(1-eps)/2 is idempotent", mw_multiply(h, h), h);
    check("(1-eps)/2 + e_minus = 1", mw_add(h, em), one);
    check("(1-eps)/2 * e_minus = 0", mw_multiply(h, em), MWElement{});
    check("(1-eps)/2 * eta = 0", mw_multiply(h, eta), MWElement{});
    return rep;
}

namespace {

int rank_rational(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == Rational(0)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][col];
        for (std::size_t j = col; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == Rational(0)) continue;
            Rational factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] = rows[i][j] - factor * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

SplitResult split_module(const std::vector<std::vector<Rational>>& eps_action) {
    const std::size_t n = eps_action.size();
    for (const auto& row : eps_action)
        if (row.size() != n)
            throw std::invalid_argument("split_module: action matrix is not square");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational entry(0);
            for (std::size_t k = 0; k < n; ++k)
                entry = entry + eps_action[i][k] * eps_action[k][j];
            if (entry != (i == j ? Rational(1) : Rational(0)))
                throw std::invalid_argument("split_module: action is not an involution");
        }

    std::vector<std::vector<Rational>> plus(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::vector<Rational>> minus = plus;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational delta = (i == j) ? Rational(1) : Rational(0);
            plus[i][j] = (delta - eps_action[i][j]) * half;
            minus[i][j] = (delta + eps_action[i][j]) * half;
        }

    SplitResult out;
    out.plus_rank = rank_rational(plus);
    out.minus_rank = rank_rational(minus);
    if (out.plus_rank + out.minus_rank != static_cast<int>(n))
        throw std::logic_error("split_module: eigenpart ranks do not add up");
    return out;
}

}  // namespace motivic
