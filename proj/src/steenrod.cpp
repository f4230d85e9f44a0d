#include "motivic/steenrod.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace motivic {

const char* side_name(Side s) {
    switch (s) {
        case Side::Classical: return "classical";
        case Side::Real: return "real";
        case Side::C2: return "c2";
    }
    return "?";
}

bool theta_exp_allowed(Side side, int k) {
    switch (side) {
        case Side::Classical: return k == 0;
        case Side::Real: return k >= 0;
        case Side::C2: return true;
    }
    return false;
}

void validate_prime(Fp p) {
    if (p < 3 || p >= (1u << 16) || p % 2 == 0)
        throw std::invalid_argument("p must be an odd prime below 2^16");
    for (Fp d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::invalid_argument("p must be prime");
}

int Monomial::tau_count() const { return std::popcount(taus); }

void Monomial::trim() {
    while (!xis.empty() && xis.back() == 0) xis.pop_back();
}

bool Monomial::operator<(const Monomial& o) const {
    if (theta != o.theta) return theta < o.theta;
    if (taus != o.taus) return taus > o.taus;  // descending mask
    return xis < o.xis;  // trimmed, so std lex matches zero-padded lex
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " ";
        first = false;
    };
    if (theta != 0) {
        sep();
        out << "th";
        if (theta != 1) out << "^" << theta;
    }
    for (int i = 0; i < 64; ++i) {
        if (taus & (std::uint64_t{1} << i)) {
            sep();
            out << "t" << i;
        }
    }
    for (size_t j = 0; j < xis.size(); ++j) {
        if (xis[j] == 0) continue;
        sep();
        out << "x" << (j + 1);
        if (xis[j] != 1) out << "^" << xis[j];
    }
    return out.str();
}

Monomial tau_gen(int i) {
    if (i < 0 || i >= 64) throw std::invalid_argument("tau index out of range");
    Monomial m;
    m.taus = std::uint64_t{1} << i;
    return m;
}

Monomial xi_gen(int i, int e) {
    if (i < 1) throw std::invalid_argument("xi index must be >= 1");
    if (e < 0) throw std::invalid_argument("xi exponent must be >= 0");
    Monomial m;
    if (e > 0) {
        m.xis.assign(i, 0);
        m.xis[i - 1] = e;
    }
    return m;
}

Monomial theta_gen(int k) {
    Monomial m;
    m.theta = k;
    return m;
}

long long ipow(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1ll << 62) / p) throw std::overflow_error("ipow overflow");
        r *= p;
    }
    return r;
}

Bidegree tau_bidegree(Fp p, int i) {
    if (i < 0) throw std::invalid_argument("tau index out of range");
    long long q = ipow(p, i);
    return {static_cast<int>(q), static_cast<int>(q - 1)};
}

Bidegree xi_bidegree(Fp p, int i) {
    if (i < 1) throw std::invalid_argument("xi index must be >= 1");
    long long q = ipow(p, i);
    return {static_cast<int>(q - 1), static_cast<int>(q - 1)};
}

Bidegree theta_bidegree() { return {2, -2}; }

Bidegree monomial_bidegree(Fp p, const Monomial& m) {
    Bidegree d = theta_bidegree() * m.theta;
    for (int i = 0; i < 64; ++i)
        if (m.taus & (std::uint64_t{1} << i)) d = d + tau_bidegree(p, i);
    for (size_t j = 0; j < m.xis.size(); ++j)
        if (m.xis[j] != 0) d = d + xi_bidegree(p, static_cast<int>(j + 1)) * m.xis[j];
    return d;
}

int theta_free_weight(Fp p, const Monomial& m) {
    Monomial stripped = m;
    stripped.theta = 0;
    return monomial_bidegree(p, stripped).n;
}

std::pair<Monomial, Fp> mono_multiply(Fp p, const Monomial& a, const Monomial& b) {
    if (a.taus & b.taus) return {Monomial{}, 0};
    Monomial r;
    r.theta = a.theta + b.theta;
    r.taus = a.taus | b.taus;
    r.xis.resize(std::max(a.xis.size(), b.xis.size()), 0);
    for (size_t j = 0; j < a.xis.size(); ++j) r.xis[j] += a.xis[j];
    for (size_t j = 0; j < b.xis.size(); ++j) r.xis[j] += b.xis[j];
    r.trim();
    // merging ascending tau lists a then b: each pair i in a, j in b with
    // i > j must transpose once, and every tau has odd total degree
    int inversions = 0;
    for (int i = 0; i < 64; ++i)
        if (a.taus & (std::uint64_t{1} << i))
            inversions += std::popcount(b.taus & ((std::uint64_t{1} << i) - 1));
    Fp c = (inversions & 1) ? p - 1 : 1;
    return {std::move(r), c};
}

void add_term(Element& e, const Monomial& m, Fp c, Fp p) {
    if (c == 0) return;
    auto it = e.find(m);
    if (it == e.end()) {
        e.emplace(m, c % p);
        return;
    }
    it->second = fp_add(it->second, c % p, p);
    if (it->second == 0) e.erase(it);
}

Element multiply(Fp p, const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            auto [m, s] = mono_multiply(p, ma, mb);
            add_term(out, m, fp_mul(s, fp_mul(ca, cb, p), p), p);
        }
    }
    return out;
}

void add_tensor_term(Tensor& t, const Monomial& l, const Monomial& r, Fp c, Fp p) {
    if (c == 0) return;
    TensorTerm key{l, r};
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), c % p);
        return;
    }
    it->second = fp_add(it->second, c % p, p);
    if (it->second == 0) t.erase(it);
}

Tensor tensor_multiply(Fp p, const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [ta, ca] : a) {
        for (const auto& [tb, cb] : b) {
            auto [l, sl] = mono_multiply(p, ta.left, tb.left);
            if (sl == 0) continue;
            auto [r, sr] = mono_multiply(p, ta.right, tb.right);
            if (sr == 0) continue;
            Fp c = fp_mul(ca, cb, p);
            c = fp_mul(c, fp_mul(sl, sr, p), p);
            if (ta.right.odd() && tb.left.odd()) c = fp_neg(c, p);
            add_tensor_term(out, l, r, c, p);
        }
    }
    return out;
}

namespace {

Tensor psi_tau(Fp p, int n) {
    Tensor t;
    add_tensor_term(t, tau_gen(n), Monomial{}, 1, p);
    for (int i = 0; i <= n; ++i) {
        long long e = ipow(p, i);
        if (e > (1ll << 30)) throw std::overflow_error("coproduct exponent overflow");
        Monomial left = (i == n) ? Monomial{} : xi_gen(n - i, static_cast<int>(e));
        add_tensor_term(t, left, tau_gen(i), 1, p);
    }
    return t;
}

Tensor psi_xi(Fp p, int n) {
    Tensor t;
    for (int i = 0; i <= n; ++i) {
        long long e = ipow(p, i);
        if (e > (1ll << 30)) throw std::overflow_error("coproduct exponent overflow");
        Monomial left = (i == n) ? Monomial{} : xi_gen(n - i, static_cast<int>(e));
        Monomial right = (i == 0) ? Monomial{} : xi_gen(i);
        add_tensor_term(t, left, right, 1, p);
    }
    return t;
}

Tensor compute_coproduct(Fp p, const Monomial& m) {
    Tensor acc;
    add_tensor_term(acc, theta_gen(m.theta), theta_gen(m.theta), 1, p);
    for (int i = 0; i < 64; ++i)
        if (m.taus & (std::uint64_t{1} << i)) acc = tensor_multiply(p, acc, psi_tau(p, i));
    for (size_t j = 0; j < m.xis.size(); ++j) {
        if (m.xis[j] == 0) continue;
        Tensor f = psi_xi(p, static_cast<int>(j + 1));
        for (int e = 0; e < m.xis[j]; ++e) acc = tensor_multiply(p, acc, f);
    }
    return acc;
}

std::mutex g_psi_mutex;
std::map<std::pair<Fp, Monomial>, Tensor> g_psi_cache;

}  // namespace

const Tensor& coproduct(Fp p, const Monomial& m) {
    {
        std::lock_guard<std::mutex> lock(g_psi_mutex);
        auto it = g_psi_cache.find({p, m});
        if (it != g_psi_cache.end()) return it->second;
    }
    Tensor t = compute_coproduct(p, m);
    std::lock_guard<std::mutex> lock(g_psi_mutex);
    // map nodes are stable, so the reference survives later inserts
    return g_psi_cache.emplace(std::make_pair(p, m), std::move(t)).first->second;
}

Tensor reduced_coproduct(Fp p, const Monomial& m) {
    Tensor t = coproduct(p, m);
    add_tensor_term(t, m, Monomial{}, p - 1, p);
    add_tensor_term(t, Monomial{}, m, p - 1, p);
    return t;
}

namespace {

void xi_solutions(Fp p, int pos, int max_pos, int rem, std::vector<int>& cur,
                  std::uint64_t mask, std::vector<Monomial>& out) {
    if (rem == 0) {
        Monomial m;
        m.taus = mask;
        m.xis = cur;
        m.trim();
        out.push_back(std::move(m));
        return;
    }
    if (pos > max_pos) return;
    long long cost = 2 * ipow(p, pos) - 2;
    for (int e = 0; e * cost <= rem; ++e) {
        cur[pos - 1] = e;
        xi_solutions(p, pos + 1, max_pos, rem - static_cast<int>(e * cost), cur, mask, out);
    }
    cur[pos - 1] = 0;
}

std::vector<Monomial> compute_theta_free(Fp p, int t) {
    std::vector<Monomial> out;
    if (t < 0) return out;
    if (t == 0) {
        out.push_back(Monomial{});
        return out;
    }
    int tmax = -1;
    while (2 * ipow(p, tmax + 1) - 1 <= t) ++tmax;
    int xmax = 0;
    while (2 * ipow(p, xmax + 1) - 2 <= t) ++xmax;
    std::uint64_t top = tmax < 0 ? 1 : (std::uint64_t{1} << (tmax + 1));
    std::vector<int> cur(std::max(xmax, 0), 0);
    for (std::uint64_t mask = top; mask-- > 0;) {
        long long tau_total = 0;
        for (int i = 0; i <= tmax; ++i)
            if (mask & (std::uint64_t{1} << i)) tau_total += 2 * ipow(p, i) - 1;
        long long rem = t - tau_total;
        if (rem < 0 || rem % 2 != 0) continue;
        if (rem > 0 && xmax == 0) continue;
        if (rem == 0) {
            Monomial m;
            m.taus = mask;
            out.push_back(std::move(m));
        } else {
            xi_solutions(p, 1, xmax, static_cast<int>(rem), cur, mask, out);
        }
    }
    return out;
}

std::mutex g_enum_mutex;
std::map<std::pair<Fp, int>, std::vector<Monomial>> g_enum_cache;

}  // namespace

const std::vector<Monomial>& theta_free_monomials(Fp p, int t) {
    {
        std::lock_guard<std::mutex> lock(g_enum_mutex);
        auto it = g_enum_cache.find({p, t});
        if (it != g_enum_cache.end()) return it->second;
    }
    std::vector<Monomial> v = compute_theta_free(p, t);
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    return g_enum_cache.emplace(std::make_pair(p, t), std::move(v)).first->second;
}

std::vector<Monomial> enumerate_monomials(const AlgebraParams& params, Bidegree deg) {
    std::vector<Monomial> out;
    int t = deg.total();
    if (t < 0) return out;
    for (const Monomial& base : theta_free_monomials(params.p, t)) {
        int l0 = theta_free_weight(params.p, base);
        int diff = l0 - deg.n;
        if (diff % 2 != 0) continue;
        int k = diff / 2;
        if (!theta_exp_allowed(params.side, k)) continue;
        Monomial m = base;
        m.theta = k;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace motivic
