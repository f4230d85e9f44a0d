#include "motivic/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace motivic {

namespace {

// Oracle-local monomial: tau indices as a sorted list, xi exponents as a
// map, no theta.  The empty pair is the unit.
struct OMono {
    std::vector<int> taus;
    std::map<int, int> xis;

    bool is_unit() const { return taus.empty() && xis.empty(); }
    int parity() const { return static_cast<int>(taus.size()) % 2; }

    bool operator==(const OMono& o) const { return taus == o.taus && xis == o.xis; }
    bool operator<(const OMono& o) const {
        if (taus != o.taus) return taus < o.taus;
        return xis < o.xis;
    }
};

long long opow(int p, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

OMono otau(int i) {
    OMono u;
    u.taus.push_back(i);
    return u;
}

OMono oxi(int i, int e) {
    OMono u;
    if (e > 0) u.xis[i] = e;
    return u;
}

// (total degree, weight) of a theta-free oracle monomial
std::pair<long long, long long> ototal_weight(int p, const OMono& u) {
    long long t = 0, w = 0;
    for (int i : u.taus) {
        t += 2 * opow(p, i) - 1;
        w += opow(p, i) - 1;
    }
    for (const auto& [i, e] : u.xis) {
        t += 2 * (opow(p, i) - 1) * e;
        w += (opow(p, i) - 1) * e;
    }
    return {t, w};
}

// Product with the sign obtained by literally bubble-sorting the combined
// tau sequence and counting swaps.  coeff 0 signals a repeated tau.
struct OProd {
    OMono mono;
    int coeff = 0;
};

OProd omultiply(int p, const OMono& a, const OMono& b) {
    std::vector<int> seq = a.taus;
    seq.insert(seq.end(), b.taus.begin(), b.taus.end());
    int swaps = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] > seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                ++swaps;
                moved = true;
            }
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1]) return {};
    OProd out;
    out.mono.taus = std::move(seq);
    out.mono.xis = a.xis;
    for (const auto& [i, e] : b.xis) out.mono.xis[i] += e;
    out.coeff = (swaps % 2 == 0) ? 1 : p - 1;
    return out;
}

using OTensor = std::map<std::pair<OMono, OMono>, int>;

void oaccumulate(OTensor& acc, const OMono& x, const OMono& y, int c, int p) {
    c = ((c % p) + p) % p;
    if (c == 0) return;
    auto key = std::make_pair(x, y);
    int v = (acc[key] + c) % p;
    if (v == 0)
        acc.erase(key);
    else
        acc[key] = v;
}

OTensor otensor_multiply(int p, const OTensor& s, const OTensor& t) {
    OTensor out;
    for (const auto& [xy, c] : s)
        for (const auto& [uv, d] : t) {
            OProd left = omultiply(p, xy.first, uv.first);
            OProd right = omultiply(p, xy.second, uv.second);
            if (left.coeff == 0 || right.coeff == 0) continue;
            int coeff = c * d % p;
            coeff = coeff * left.coeff % p * right.coeff % p;
            if (xy.second.parity() && uv.first.parity()) coeff = p - coeff;
            oaccumulate(out, left.mono, right.mono, coeff, p);
        }
    return out;
}

OTensor opsi_tau(int p, int n) {
    OTensor out;
    oaccumulate(out, otau(n), OMono{}, 1, p);
    for (int i = 0; i <= n; ++i) {
        OMono left = (n - i > 0) ? oxi(n - i, static_cast<int>(opow(p, i))) : OMono{};
        oaccumulate(out, left, otau(i), 1, p);
    }
    return out;
}

OTensor opsi_xi(int p, int n) {
    OTensor out;
    for (int i = 0; i <= n; ++i) {
        OMono left = (n - i > 0) ? oxi(n - i, static_cast<int>(opow(p, i))) : OMono{};
        OMono right = (i > 0) ? oxi(i, 1) : OMono{};
        oaccumulate(out, left, right, 1, p);
    }
    return out;
}

// Full coproduct built factor by factor from the generator formulas.
OTensor opsi(int p, const OMono& u) {
    OTensor acc;
    oaccumulate(acc, OMono{}, OMono{}, 1, p);
    for (int i : u.taus) acc = otensor_multiply(p, acc, opsi_tau(p, i));
    for (const auto& [i, e] : u.xis) {
        OTensor g = opsi_xi(p, i);
        for (int k = 0; k < e; ++k) acc = otensor_multiply(p, acc, g);
    }
    return acc;
}

// Every theta-free monomial of total degree exactly t, any weight, by
// depth-first search: tau indices in order, then xi exponents.
void olist_xi(int p, int index, int remaining, OMono& partial, std::vector<OMono>& out) {
    if (remaining == 0) {
        out.push_back(partial);
        return;
    }
    long long cost = 2 * (opow(p, index) - 1);
    if (cost > remaining) return;
    int max_e = static_cast<int>(remaining / cost);
    for (int e = 0; e <= max_e; ++e) {
        if (e > 0) partial.xis[index] = e;
        olist_xi(p, index + 1, remaining - e * static_cast<int>(cost), partial, out);
    }
    partial.xis.erase(index);
}

void olist_tau(int p, int index, int remaining, OMono& partial, std::vector<OMono>& out) {
    long long cost = 2 * opow(p, index) - 1;
    if (cost > remaining) {
        olist_xi(p, 1, remaining, partial, out);
        return;
    }
    olist_tau(p, index + 1, remaining, partial, out);
    partial.taus.push_back(index);
    olist_tau(p, index + 1, remaining - static_cast<int>(cost), partial, out);
    partial.taus.pop_back();
}

std::vector<OMono> olist(int p, int t) {
    std::vector<OMono> out;
    if (t < 0) return out;
    OMono partial;
    olist_tau(p, 0, t, partial, out);
    return out;
}

struct OWord {
    long long theta = 0;
    std::vector<OMono> letters;

    bool operator==(const OWord& o) const {
        return theta == o.theta && letters == o.letters;
    }
    bool operator<(const OWord& o) const {
        if (theta != o.theta) return theta < o.theta;
        return letters < o.letters;
    }
};

void check_cutoffs(const OracleConfig& cfg, Bidegree deg) {
    validate_prime(static_cast<Fp>(cfg.p));
    if (cfg.max_total < 0 || cfg.max_weight < 0)
        throw std::invalid_argument("oracle: negative cutoff");
    if (deg.total() > cfg.max_total || std::abs(deg.n) > cfg.max_weight)
        throw std::domain_error("oracle: requested degree exceeds the configured cutoffs");
}

// All filtration-f words of the given bidegree.  Letters are theta-free
// and may be the unit when allow_unit is set; the theta power is solved
// from the weight afterwards and gated by the side.
void oword_extend(const OracleConfig& cfg, int f, Bidegree deg, bool allow_unit,
                  std::vector<OMono>& letters, int remaining, std::vector<OWord>& out) {
    int pos = static_cast<int>(letters.size());
    if (pos == f) {
        if (remaining != 0) return;
        long long weight = 0;
        for (const OMono& u : letters) weight += ototal_weight(cfg.p, u).second;
        long long shift = weight - deg.n;
        if (shift % 2 != 0) return;
        long long k = shift / 2;
        if (!theta_exp_allowed(cfg.side, static_cast<int>(k))) return;
        OWord w;
        w.theta = k;
        w.letters = letters;
        out.push_back(w);
        return;
    }
    int floor_needed = allow_unit ? 0 : 1;
    int slots_after = f - pos - 1;
    for (int t = floor_needed; t <= remaining - slots_after * floor_needed; ++t)
        for (const OMono& u : olist(cfg.p, t)) {
            if (!allow_unit && u.is_unit()) continue;
            letters.push_back(u);
            oword_extend(cfg, f, deg, allow_unit, letters, remaining - t, out);
            letters.pop_back();
        }
}

std::vector<OWord> owords(const OracleConfig& cfg, int f, Bidegree deg, bool allow_unit) {
    check_cutoffs(cfg, deg);
    if (f < 0) throw std::invalid_argument("oracle: negative filtration");
    std::vector<OWord> out;
    if (deg.total() < 0) return out;
    std::vector<OMono> letters;
    // Unit letters contribute degree zero, so the word count stays finite
    // only because each slot ranges over a fixed finite monomial list.
    if (f == 0) {
        if (deg.total() != 0) return out;
        oword_extend(cfg, 0, deg, allow_unit, letters, 0, out);
        return out;
    }
    oword_extend(cfg, f, deg, allow_unit, letters, deg.total(), out);
    std::sort(out.begin(), out.end());
    return out;
}

Monomial convert_mono(const OMono& u, long long theta) {
    Monomial m;
    m.theta = static_cast<int>(theta);
    for (int i : u.taus) m.taus |= (std::uint64_t{1} << i);
    for (const auto& [i, e] : u.xis) {
        if (static_cast<int>(m.xis.size()) < i) m.xis.resize(i, 0);
        m.xis[i - 1] = e;
    }
    return m;
}

CobarWord convert_word(const OWord& w) {
    CobarWord out;
    out.theta = static_cast<int>(w.theta);
    for (const OMono& u : w.letters) out.factors.push_back(convert_mono(u, 0));
    return out;
}

using DenseRows = std::vector<std::vector<int>>;

int odense_rank(DenseRows a, int p) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        // scale the pivot row to 1 by brute-force inverse search
        int inv = 0;
        for (int x = 1; x < p; ++x)
            if (a[r][c] * x % p == 1) inv = x;
        for (std::size_t j = 0; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] % p == 0) continue;
            int factor = a[i][c] % p;
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = ((a[i][j] - factor * a[r][j]) % p + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

bool odense_composite_zero(const DenseRows& second, const DenseRows& first, int p) {
    // second has shape (k x m), first (m x n); entries of second*first
    std::size_t k = second.size();
    std::size_t n = first.empty() ? 0 : first[0].size();
    std::size_t m = first.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long acc = 0;
            for (std::size_t l = 0; l < m; ++l) acc += second[i][l] * first[l][j];
            if (acc % p != 0) return false;
        }
    return true;
}

// Alternating sum of all f+2 coface maps on unnormalized words: unit
// insertion at the ends, the full coproduct at each interior position.
DenseRows ofull_differential(const OracleConfig& cfg, const std::vector<OWord>& source,
                             const std::vector<OWord>& target) {
    std::map<OWord, int> target_index;
    for (std::size_t i = 0; i < target.size(); ++i)
        target_index[target[i]] = static_cast<int>(i);

    DenseRows matrix(target.size(), std::vector<int>(source.size(), 0));
    int p = cfg.p;
    auto add = [&](const OWord& w, int col, int coeff) {
        auto it = target_index.find(w);
        if (it == target_index.end())
            throw std::logic_error("oracle: coface image missing from target basis");
        int& cell = matrix[it->second][col];
        cell = ((cell + coeff) % p + p) % p;
    };

    for (std::size_t col = 0; col < source.size(); ++col) {
        const OWord& w = source[col];
        int f = static_cast<int>(w.letters.size());

        OWord front = w;
        front.letters.insert(front.letters.begin(), OMono{});
        add(front, static_cast<int>(col), 1);

        for (int i = 1; i <= f; ++i) {
            int sign = (i % 2 == 0) ? 1 : p - 1;
            for (const auto& [xy, c] : opsi(p, w.letters[i - 1])) {
                OWord image;
                image.theta = w.theta;
                image.letters.assign(w.letters.begin(), w.letters.begin() + (i - 1));
                image.letters.push_back(xy.first);
                image.letters.push_back(xy.second);
                image.letters.insert(image.letters.end(), w.letters.begin() + i,
                                     w.letters.end());
                add(image, static_cast<int>(col), sign * c % p);
            }
        }

        OWord back = w;
        back.letters.push_back(OMono{});
        add(back, static_cast<int>(col), (f % 2 == 0) ? p - 1 : 1);
    }
    return matrix;
}

}  // namespace

std::vector<Monomial> oracle_enumerate(const OracleConfig& cfg, Bidegree deg) {
    check_cutoffs(cfg, deg);
    std::vector<Monomial> out;
    if (deg.total() < 0) return out;
    for (const OMono& u : olist(cfg.p, deg.total())) {
        auto [t, w] = ototal_weight(cfg.p, u);
        long long shift = w - deg.n;
        if (shift % 2 != 0) continue;
        long long k = shift / 2;
        if (!theta_exp_allowed(cfg.side, static_cast<int>(k))) continue;
        out.push_back(convert_mono(u, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FpMatrix oracle_differential(const OracleConfig& cfg, int f, Bidegree deg) {
    if (f < 1) throw std::invalid_argument("oracle: differential needs f >= 1");
    std::vector<OWord> source = owords(cfg, f, deg, false);
    std::vector<OWord> target = owords(cfg, f + 1, deg, false);

    std::vector<CobarWord> source_words, target_words;
    for (const OWord& w : source) source_words.push_back(convert_word(w));
    for (const OWord& w : target) target_words.push_back(convert_word(w));
    std::sort(source_words.begin(), source_words.end());
    std::sort(target_words.begin(), target_words.end());

    int p = cfg.p;
    std::vector<FpTriplet> triplets;
    for (const OWord& w : source) {
        CobarWord cw = convert_word(w);
        auto sit = std::lower_bound(source_words.begin(), source_words.end(), cw);
        int col = static_cast<int>(sit - source_words.begin());
        int fcount = static_cast<int>(w.letters.size());
        for (int i = 1; i <= fcount; ++i) {
            int sign = (i % 2 == 0) ? 1 : p - 1;
            for (const auto& [xy, c] : opsi(p, w.letters[i - 1])) {
                // dropping unit letters projects the full coproduct to the
                // reduced one
                if (xy.first.is_unit() || xy.second.is_unit()) continue;
                OWord image;
                image.theta = w.theta;
                image.letters.assign(w.letters.begin(), w.letters.begin() + (i - 1));
                image.letters.push_back(xy.first);
                image.letters.push_back(xy.second);
                image.letters.insert(image.letters.end(), w.letters.begin() + i,
                                     w.letters.end());
                CobarWord tw = convert_word(image);
                auto tit = std::lower_bound(target_words.begin(), target_words.end(), tw);
                if (tit == target_words.end() || *tit != tw)
                    throw std::logic_error("oracle: image word missing from basis");
                int row = static_cast<int>(tit - target_words.begin());
                triplets.push_back({row, col, static_cast<Fp>(sign * c % p)});
            }
        }
    }
    return FpMatrix::from_triplets(static_cast<Fp>(p), static_cast<int>(target_words.size()),
                                   static_cast<int>(source_words.size()), std::move(triplets));
}

int oracle_homology_dim(const OracleConfig& cfg, int f, Bidegree deg) {
    if (f < 0) throw std::invalid_argument("oracle: negative filtration");
    std::vector<OWord> cur = owords(cfg, f, deg, true);
    if (cur.empty()) return 0;
    std::vector<OWord> next = owords(cfg, f + 1, deg, true);
    DenseRows d_out = ofull_differential(cfg, cur, next);

    int rank_in = 0;
    if (f > 0) {
        std::vector<OWord> prev = owords(cfg, f - 1, deg, true);
        DenseRows d_in = ofull_differential(cfg, prev, cur);
        if (!odense_composite_zero(d_out, d_in, cfg.p))
            throw std::logic_error("oracle: coface differentials do not compose to zero");
        rank_in = odense_rank(d_in, cfg.p);
    }
    int kernel = static_cast<int>(cur.size()) - odense_rank(d_out, cfg.p);
    return kernel - rank_in;
}

}  // namespace motivic
