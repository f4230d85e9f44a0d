#include "motivic/ext.hpp"

#include "motivic/parallel.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace motivic {

namespace {

using BlockKey = std::tuple<Fp, int, int, int>;

std::mutex g_bh_mutex;
std::map<BlockKey, Subquotient> g_bh_cache;

std::mutex g_sq_mutex;
std::map<std::tuple<Fp, Side, int, int, int>, Subquotient> g_sq_cache;

}  // namespace

const Subquotient& block_homology(Fp p, int f, int t, int l) {
    BlockKey key{p, f, t, l};
    {
        std::lock_guard<std::mutex> lock(g_bh_mutex);
        auto it = g_bh_cache.find(key);
        if (it != g_bh_cache.end()) return it->second;
    }
    const FpMatrix& d_out = block_differential(p, f, t, l);
    FpMatrix d_in = f == 0 ? FpMatrix(p, d_out.cols(), 0)
                           : block_differential(p, f - 1, t, l);
    Subquotient h = homology(d_out, d_in);
    std::lock_guard<std::mutex> lock(g_bh_mutex);
    return g_bh_cache.emplace(key, std::move(h)).first->second;
}

const Subquotient& ext_subquotient(const AlgebraParams& params, Tridegree t) {
    std::tuple<Fp, Side, int, int, int> key{params.p, params.side, t.f, t.deg.m,
                                            t.deg.n};
    {
        std::lock_guard<std::mutex> lock(g_sq_mutex);
        auto it = g_sq_cache.find(key);
        if (it != g_sq_cache.end()) return it->second;
    }
    FpMatrix d_out = differential_matrix(params, t);
    FpMatrix d_in = t.f == 0
                        ? FpMatrix(params.p, d_out.cols(), 0)
                        : differential_matrix(params, {t.f - 1, t.deg});
    Subquotient h = homology(d_out, d_in);
    std::lock_guard<std::mutex> lock(g_sq_mutex);
    return g_sq_cache.emplace(key, std::move(h)).first->second;
}

std::string ExtCell::class_str(int i) const {
    const FpVec& v = basis.at(i);
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (v[j] != 1) out << v[j] << "*";
        out << ambient[j].str();
    }
    if (first) out << "0";
    return out.str();
}

ExtCell ext_cell(const AlgebraParams& params, Tridegree t) {
    ExtCell cell;
    cell.tri = t;
    cell.ambient = cobar_basis(params, t);
    cell.basis = ext_subquotient(params, t).reps();
    return cell;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Iso: return "iso";
        case Verdict::InjectionNotSurjection: return "injection-not-surjection";
        case Verdict::NotInjective: return "not-injective";
        case Verdict::Zero: return "zero";
    }
    return "?";
}

Verdict classify_map(int source_dim, int target_dim, int map_rank) {
    if (map_rank == source_dim && map_rank == target_dim) return Verdict::Iso;
    if (map_rank == source_dim) return Verdict::InjectionNotSurjection;
    if (map_rank == 0) return Verdict::Zero;
    return Verdict::NotInjective;
}

ComparisonCell ext_comparison(Fp p, Tridegree t) {
    const Subquotient& src = ext_subquotient({p, Side::Real}, t);
    const Subquotient& dst = ext_subquotient({p, Side::C2}, t);
    FpMatrix induced = induced_map(src, dst, comparison_matrix(p, t));
    ComparisonCell out;
    out.tri = t;
    out.source_dim = src.dim();
    out.target_dim = dst.dim();
    out.map_rank = rank(induced);
    out.verdict = classify_map(out.source_dim, out.target_dim, out.map_rank);
    return out;
}

int uct_oracle(Fp p, Side side, Tridegree t) {
    if (side == Side::Classical)
        throw std::invalid_argument("uct_oracle compares against Real or C2 only");
    int total = t.deg.total();
    if (total < 0) return 0;
    int n = t.deg.n;
    int parity_start = ((n % 2) + 2) % 2;
    int start = side == Side::Real ? std::max(n, parity_start) : parity_start;
    int dim = 0;
    for (int l = start; 2 * l <= total; l += 2)
        dim += block_homology(p, t.f, total, l).dim();
    return dim;
}

ExtChart chart(const AlgebraParams& params, const Window& window, int jobs) {
    ExtChart out;
    out.params = params;
    out.window = window;
    std::vector<Tridegree> cells;
    for (int f = 0; f <= window.max_f; ++f)
        for (int total = 0; total <= window.max_total; ++total)
            for (int n = window.min_weight; n <= window.max_weight; ++n)
                cells.push_back({f, {total - n, n}});
    std::vector<ExtCell> results(cells.size());
    parallel_for(static_cast<int>(cells.size()), jobs,
                 [&](int i) { results[i] = ext_cell(params, cells[i]); });
    for (size_t i = 0; i < cells.size(); ++i)
        out.cells.emplace(cells[i], std::move(results[i]));
    return out;
}

}  // namespace motivic
