#include "motivic/cobar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace motivic {

std::string CobarWord::str() const {
    if (factors.empty()) return theta_gen(theta).str();
    std::ostringstream out;
    if (theta != 0) out << theta_gen(theta).str() << " ";
    out << "[";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "|";
        out << factors[i].str();
    }
    out << "]";
    return out.str();
}

Bidegree word_bidegree(Fp p, const CobarWord& w) {
    Bidegree d = theta_bidegree() * w.theta;
    for (const Monomial& m : w.factors) d = d + monomial_bidegree(p, m);
    return d;
}

namespace {

using BlockKey = std::tuple<Fp, int, int, int>;  // p, f, t, l

std::mutex g_words_mutex;
std::map<BlockKey, std::vector<CobarWord>> g_words_cache;

void extend_words(Fp p, int letters_left, int t_rem, int l_rem,
                  std::vector<Monomial>& cur, std::vector<CobarWord>& out) {
    if (letters_left == 0) {
        if (t_rem == 0 && l_rem == 0) {
            CobarWord w;
            w.factors = cur;
            out.push_back(std::move(w));
        }
        return;
    }
    if (t_rem < letters_left || l_rem < 0 || 2 * l_rem > t_rem) return;
    for (int t1 = 1; t1 <= t_rem - (letters_left - 1); ++t1) {
        for (const Monomial& m : theta_free_monomials(p, t1)) {
            int w1 = theta_free_weight(p, m);
            if (w1 > l_rem) continue;
            cur.push_back(m);
            extend_words(p, letters_left - 1, t_rem - t1, l_rem - w1, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<CobarWord> compute_block_words(Fp p, int f, int t, int l) {
    std::vector<CobarWord> out;
    if (f < 0 || t < 0 || l < 0 || 2 * l > t) return out;
    if (f == 0) {
        if (t == 0 && l == 0) out.push_back(CobarWord{});
        return out;
    }
    std::vector<Monomial> cur;
    extend_words(p, f, t, l, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::mutex g_diff_mutex;
std::map<BlockKey, FpMatrix> g_diff_cache;

FpMatrix compute_block_differential(Fp p, int f, int t, int l) {
    const std::vector<CobarWord>& src = block_words(p, f, t, l);
    const std::vector<CobarWord>& dst = block_words(p, f + 1, t, l);
    std::vector<FpTriplet> trip;
    for (int col = 0; col < static_cast<int>(src.size()); ++col) {
        const CobarWord& w = src[col];
        for (int i = 0; i < f; ++i) {
            Fp sign = (i % 2 == 0) ? p - 1 : 1;  // (-1)^{i+1} for 0-based i
            for (const auto& [term, c] : reduced_coproduct(p, w.factors[i])) {
                CobarWord img;
                img.factors.reserve(f + 1);
                img.factors.insert(img.factors.end(), w.factors.begin(),
                                   w.factors.begin() + i);
                img.factors.push_back(term.left);
                img.factors.push_back(term.right);
                img.factors.insert(img.factors.end(), w.factors.begin() + i + 1,
                                   w.factors.end());
                auto it = std::lower_bound(dst.begin(), dst.end(), img);
                if (it == dst.end() || *it != img)
                    throw std::logic_error("differential image misses the target basis");
                int row = static_cast<int>(it - dst.begin());
                trip.push_back({row, col, fp_mul(sign, c, p)});
            }
        }
    }
    return FpMatrix::from_triplets(p, static_cast<int>(dst.size()),
                                   static_cast<int>(src.size()), std::move(trip));
}

}  // namespace

const std::vector<CobarWord>& block_words(Fp p, int f, int t, int l) {
    BlockKey key{p, f, t, l};
    {
        std::lock_guard<std::mutex> lock(g_words_mutex);
        auto it = g_words_cache.find(key);
        if (it != g_words_cache.end()) return it->second;
    }
    std::vector<CobarWord> v = compute_block_words(p, f, t, l);
    std::lock_guard<std::mutex> lock(g_words_mutex);
    return g_words_cache.emplace(key, std::move(v)).first->second;
}

const FpMatrix& block_differential(Fp p, int f, int t, int l) {
    BlockKey key{p, f, t, l};
    {
        std::lock_guard<std::mutex> lock(g_diff_mutex);
        auto it = g_diff_cache.find(key);
        if (it != g_diff_cache.end()) return it->second;
    }
    FpMatrix m = compute_block_differential(p, f, t, l);
    std::lock_guard<std::mutex> lock(g_diff_mutex);
    return g_diff_cache.emplace(key, std::move(m)).first->second;
}

std::vector<SliceBlock> slice_blocks(const AlgebraParams& params, Tridegree t) {
    std::vector<SliceBlock> out;
    int total = t.deg.total();
    if (total < 0) return out;
    int n = t.deg.n;
    // l must match the parity of n so that k = (l - n)/2 is an integer
    for (int l = ((n % 2) + 2) % 2; 2 * l <= total; l += 2) {
        int k = (l - n) / 2;
        if (theta_exp_allowed(params.side, k)) out.push_back({l, k});
    }
    return out;
}

std::vector<CobarWord> cobar_basis(const AlgebraParams& params, Tridegree t) {
    std::vector<CobarWord> out;
    int total = t.deg.total();
    for (const SliceBlock& b : slice_blocks(params, t)) {
        for (const CobarWord& w : block_words(params.p, t.f, total, b.l)) {
            CobarWord with_theta = w;
            with_theta.theta = b.theta;
            out.push_back(std::move(with_theta));
        }
    }
    return out;
}

FpMatrix differential_matrix(const AlgebraParams& params, Tridegree t) {
    int total = t.deg.total();
    auto blocks = slice_blocks(params, t);
    int row_off = 0, col_off = 0;
    std::vector<FpTriplet> trip;
    for (const SliceBlock& b : blocks) {
        const FpMatrix& d = block_differential(params.p, t.f, total, b.l);
        for (const FpTriplet& e : d.entries())
            trip.push_back({e.row + row_off, e.col + col_off, e.val});
        row_off += d.rows();
        col_off += d.cols();
    }
    return FpMatrix::from_triplets(params.p, row_off, col_off, std::move(trip));
}

FpMatrix comparison_matrix(Fp p, Tridegree t) {
    auto real_basis = cobar_basis({p, Side::Real}, t);
    auto c2_basis = cobar_basis({p, Side::C2}, t);
    std::vector<FpTriplet> trip;
    for (int col = 0; col < static_cast<int>(real_basis.size()); ++col) {
        auto it = std::lower_bound(c2_basis.begin(), c2_basis.end(), real_basis[col]);
        if (it == c2_basis.end() || *it != real_basis[col])
            throw std::logic_error("Real word missing from the C2 basis");
        trip.push_back({static_cast<int>(it - c2_basis.begin()), col, 1});
    }
    return FpMatrix::from_triplets(p, static_cast<int>(c2_basis.size()),
                                   static_cast<int>(real_basis.size()), std::move(trip));
}

std::vector<CobarWord> cokernel_basis(Fp p, Tridegree t) {
    std::vector<CobarWord> out;
    for (CobarWord& w : cobar_basis({p, Side::C2}, t))
        if (w.theta < 0) out.push_back(std::move(w));
    return out;
}

}  // namespace motivic
