#include "motivic/fplinalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace motivic {

Fp fp_inv(Fp a, Fp p) {
    if (a == 0) throw std::invalid_argument("fp_inv: zero has no inverse");
    // extended Euclid on (a, p); p is prime so gcd is 1
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Fp>(t);
}

Fp fp_from(long long v, Fp p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Fp>(r);
}

FpMatrix FpMatrix::from_triplets(Fp p, int rows, int cols, std::vector<FpTriplet> t) {
    FpMatrix m(p, rows, cols);
    for (auto& e : t) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw std::invalid_argument("FpMatrix: triplet out of range");
        e.val %= p;
    }
    std::sort(t.begin(), t.end(), [](const FpTriplet& a, const FpTriplet& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (const auto& e : t) {
        if (!m.entries_.empty() && m.entries_.back().row == e.row &&
            m.entries_.back().col == e.col) {
            m.entries_.back().val = fp_add(m.entries_.back().val, e.val, p);
        } else {
            m.entries_.push_back(e);
        }
    }
    m.entries_.erase(std::remove_if(m.entries_.begin(), m.entries_.end(),
                                    [](const FpTriplet& e) { return e.val == 0; }),
                     m.entries_.end());
    return m;
}

FpMatrix FpMatrix::identity(Fp p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
    return m;
}

Fp FpMatrix::at(int r, int c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                               [](const FpTriplet& e, const std::pair<int, int>& k) {
                                   return std::tie(e.row, e.col) < std::tie(k.first, k.second);
                               });
    if (it != entries_.end() && it->row == r && it->col == c) return it->val;
    return 0;
}

FpVec FpMatrix::apply(const FpVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("FpMatrix::apply: size mismatch");
    FpVec out(rows_, 0);
    for (const auto& e : entries_) {
        if (v[e.col] != 0)
            out[e.row] = fp_add(out[e.row], fp_mul(e.val, v[e.col], p_), p_);
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    std::vector<FpTriplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.val});
    return from_triplets(p_, cols_, rows_, std::move(t));
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].row != o.entries_[i].row || entries_[i].col != o.entries_[i].col ||
            entries_[i].val != o.entries_[i].val)
            return false;
    }
    return true;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
    if (a.p() != b.p()) throw std::invalid_argument("multiply: prime mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Fp p = a.p();
    // a's entries grouped by column for column-at-a-time accumulation
    std::vector<std::vector<std::pair<int, Fp>>> acol(a.cols());
    for (const auto& e : a.entries()) acol[e.col].push_back({e.row, e.val});
    std::vector<std::vector<std::pair<int, Fp>>> bcol(b.cols());
    for (const auto& e : b.entries()) bcol[e.col].push_back({e.row, e.val});

    std::vector<FpTriplet> out;
    FpVec acc(a.rows(), 0);
    std::vector<int> touched;
    for (int j = 0; j < b.cols(); ++j) {
        for (auto [k, bv] : bcol[j]) {
            for (auto [i, av] : acol[k]) {
                if (acc[i] == 0) touched.push_back(i);
                acc[i] = fp_add(acc[i], fp_mul(av, bv, p), p);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int i : touched) {
            if (acc[i] != 0) out.push_back({i, j, acc[i]});
            acc[i] = 0;
        }
        touched.clear();
    }
    return FpMatrix::from_triplets(p, a.rows(), b.cols(), std::move(out));
}

namespace {

using SparseRow = std::vector<std::pair<int, Fp>>;  // sorted by column

SparseRow to_sparse(const FpVec& v) {
    SparseRow r;
    for (int c = 0; c < static_cast<int>(v.size()); ++c)
        if (v[c] != 0) r.push_back({c, v[c]});
    return r;
}

FpVec to_dense(const SparseRow& r, int cols) {
    FpVec v(cols, 0);
    for (auto [c, x] : r) v[c] = x;
    return v;
}

// dst -= coeff * src, both sorted
SparseRow axpy(const SparseRow& dst, const SparseRow& src, Fp coeff, Fp p) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Fp v = fp_neg(fp_mul(coeff, src[j].second, p), p);
            if (v != 0) out.push_back({src[j].first, v});
            ++j;
        } else {
            Fp v = fp_sub(dst[i].second, fp_mul(coeff, src[j].second, p), p);
            if (v != 0) out.push_back({dst[i].first, v});
            ++i; ++j;
        }
    }
    return out;
}

void scale_row(SparseRow& r, Fp c, Fp p) {
    for (auto& [col, v] : r) v = fp_mul(v, c, p);
}

Echelon rref_sparse(Fp p, int cols, const std::vector<FpVec>& input) {
    std::vector<SparseRow> work;
    work.reserve(input.size());
    for (const auto& v : input) {
        SparseRow r = to_sparse(v);
        if (!r.empty()) work.push_back(std::move(r));
    }
    // Markowitz-flavored order: sparsest rows first; ties by original index
    // (lowest first).  RREF is unique so this only affects fill, not output.
    std::vector<int> order(work.size());
    for (size_t i = 0; i < work.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return work[a].size() < work[b].size();
    });

    std::vector<SparseRow> pivot_rows;
    std::vector<int> pivot_cols;
    std::vector<int> col_to_pivot(cols, -1);
    for (int idx : order) {
        SparseRow r = std::move(work[idx]);
        while (!r.empty()) {
            int lead = r[0].first;
            int pr = col_to_pivot[lead];
            if (pr < 0) break;
            r = axpy(r, pivot_rows[pr], r[0].second, p);
        }
        if (r.empty()) continue;
        scale_row(r, fp_inv(r[0].second, p), p);
        col_to_pivot[r[0].first] = static_cast<int>(pivot_rows.size());
        pivot_cols.push_back(r[0].first);
        pivot_rows.push_back(std::move(r));
    }

    // back-substitution, processing pivots from the right
    std::vector<int> by_col(pivot_rows.size());
    for (size_t i = 0; i < by_col.size(); ++i) by_col[i] = static_cast<int>(i);
    std::sort(by_col.begin(), by_col.end(),
              [&](int a, int b) { return pivot_cols[a] < pivot_cols[b]; });
    for (int i = static_cast<int>(by_col.size()) - 1; i >= 0; --i) {
        int ri = by_col[i];
        SparseRow& r = pivot_rows[ri];
        for (size_t k = 0; k < r.size();) {
            int c = r[k].first;
            int pr = col_to_pivot[c];
            if (pr >= 0 && pr != ri && pivot_cols[pr] > pivot_cols[ri]) {
                r = axpy(r, pivot_rows[pr], r[k].second, p);
                // restart scan past own pivot; positions before k are settled
                k = 1;
            } else {
                ++k;
            }
        }
    }

    Echelon e;
    e.p = p;
    e.cols = cols;
    for (int ri : by_col) {
        e.rows.push_back(to_dense(pivot_rows[ri], cols));
        e.pivot_cols.push_back(pivot_cols[ri]);
    }
    return e;
}

Echelon rref_dense(Fp p, int cols, const std::vector<FpVec>& input) {
    std::vector<FpVec> rows;
    for (const auto& v : input) {
        bool nz = false;
        for (Fp x : v) if (x != 0) { nz = true; break; }
        if (nz) rows.push_back(v);
    }
    int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Fp inv = fp_inv(rows[r][c], p);
        for (int j = c; j < cols; ++j) rows[r][j] = fp_mul(rows[r][j], inv, p);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Fp f = rows[i][c];
            for (int j = c; j < cols; ++j)
                rows[i][j] = fp_sub(rows[i][j], fp_mul(f, rows[r][j], p), p);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    Echelon e;
    e.p = p;
    e.cols = cols;
    e.pivot_cols = pivot_cols;
    for (int i = 0; i < r; ++i) e.rows.push_back(rows[i]);
    return e;
}

std::vector<FpVec> matrix_rows(const FpMatrix& m) {
    std::vector<FpVec> rows(m.rows(), FpVec(m.cols(), 0));
    for (const auto& e : m.entries()) rows[e.row][e.col] = e.val;
    return rows;
}

}  // namespace

Echelon rref(Fp p, int cols, const std::vector<FpVec>& rows) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("rref: row length mismatch");
    if (cols < 64) return rref_dense(p, cols, rows);
    return rref_sparse(p, cols, rows);
}

int rank(const FpMatrix& m) {
    return static_cast<int>(rref(m.p(), m.cols(), matrix_rows(m)).rows.size());
}

std::vector<FpVec> kernel_basis(const FpMatrix& m) {
    Echelon e = rref(m.p(), m.cols(), matrix_rows(m));
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        FpVec v(m.cols(), 0);
        v[f] = 1;
        for (size_t i = 0; i < e.rows.size(); ++i)
            if (e.rows[i][f] != 0) v[e.pivot_cols[i]] = fp_neg(e.rows[i][f], m.p());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FpVec> image_basis(const FpMatrix& m) {
    FpMatrix t = m.transpose();
    return rref(t.p(), t.cols(), matrix_rows(t)).rows;
}

Subquotient::Subquotient(Fp p, int ambient_dim,
                         std::vector<FpVec> cycle_rref, std::vector<FpVec> boundary_rref)
    : p_(p), ambient_(ambient_dim),
      cycles_(std::move(cycle_rref)), boundaries_(std::move(boundary_rref)) {
    index_rows();
    for (const auto& b : boundaries_) {
        if (!contains_cycle(b))
            throw std::runtime_error("Subquotient: boundaries not contained in cycles");
    }
    // reduce each cycle row against boundaries + accepted reps; survivors
    // become the canonical quotient representatives
    for (const auto& cy : cycles_) {
        FpVec v = cy;
        for (int c = 0; c < ambient_; ++c) {
            if (v[c] == 0) continue;
            int r = pivot_to_row_[c];
            if (r < 0) break;
            Fp f = v[c];
            const FpVec& row = reduction_rows_[r].v;
            for (int j = c; j < ambient_; ++j)
                if (row[j] != 0) v[j] = fp_sub(v[j], fp_mul(f, row[j], p_), p_);
        }
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (v[c] != 0) { lead = c; break; }
        if (lead < 0) continue;
        Fp inv = fp_inv(v[lead], p_);
        for (auto& x : v) x = fp_mul(x, inv, p_);
        Row row;
        row.v = v;
        row.pivot = lead;
        row.rep_index = static_cast<int>(reps_.size());
        reps_.push_back(v);
        pivot_to_row_[lead] = static_cast<int>(reduction_rows_.size());
        reduction_rows_.push_back(std::move(row));
    }
    assert(static_cast<int>(reps_.size()) ==
           static_cast<int>(cycles_.size()) - static_cast<int>(boundaries_.size()));
}

void Subquotient::index_rows() {
    pivot_to_row_.assign(ambient_, -1);
    cycle_pivot_to_row_.assign(ambient_, -1);
    reduction_rows_.clear();
    cycle_rows_.clear();
    for (const auto& b : boundaries_) {
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (b[c] != 0) { lead = c; break; }
        if (lead < 0) throw std::invalid_argument("Subquotient: zero boundary row");
        Row row;
        row.v = b;
        row.pivot = lead;
        pivot_to_row_[lead] = static_cast<int>(reduction_rows_.size());
        reduction_rows_.push_back(std::move(row));
    }
    for (const auto& cy : cycles_) {
        int lead = -1;
        for (int c = 0; c < ambient_; ++c)
            if (cy[c] != 0) { lead = c; break; }
        if (lead < 0) throw std::invalid_argument("Subquotient: zero cycle row");
        if (cycle_pivot_to_row_[lead] >= 0)
            throw std::invalid_argument("Subquotient: cycle basis is not echelon");
        Row row;
        row.v = cy;
        row.pivot = lead;
        cycle_pivot_to_row_[lead] = static_cast<int>(cycle_rows_.size());
        cycle_rows_.push_back(std::move(row));
    }
}

std::optional<FpVec> Subquotient::rep_coords(const FpVec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("rep_coords: size mismatch");
    FpVec w = v;
    FpVec coords(reps_.size(), 0);
    for (int c = 0; c < ambient_; ++c) {
        if (w[c] == 0) continue;
        int r = pivot_to_row_[c];
        if (r < 0) return std::nullopt;
        Fp f = w[c];
        const Row& row = reduction_rows_[r];
        for (int j = c; j < ambient_; ++j)
            if (row.v[j] != 0) w[j] = fp_sub(w[j], fp_mul(f, row.v[j], p_), p_);
        if (row.rep_index >= 0) coords[row.rep_index] = f;
    }
    return coords;
}

bool Subquotient::contains_cycle(const FpVec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("contains_cycle: size mismatch");
    FpVec w = v;
    for (int c = 0; c < ambient_; ++c) {
        if (w[c] == 0) continue;
        int r = cycle_pivot_to_row_[c];
        if (r < 0) return false;
        Fp f = w[c];
        const FpVec& row = cycle_rows_[r].v;
        for (int j = c; j < ambient_; ++j)
            if (row[j] != 0) w[j] = fp_sub(w[j], fp_mul(f, row[j], p_), p_);
    }
    return true;
}

bool Subquotient::is_boundary(const FpVec& v) const {
    auto coords = rep_coords(v);
    if (!coords) return false;
    for (Fp c : *coords)
        if (c != 0) return false;
    return true;
}

Subquotient Subquotient::direct_sum(Fp p, const std::vector<const Subquotient*>& blocks) {
    int ambient = 0;
    for (const auto* b : blocks) {
        if (b->p() != p) throw std::invalid_argument("direct_sum: prime mismatch");
        ambient += b->ambient_dim();
    }
    std::vector<FpVec> cycles, boundaries;
    int offset = 0;
    auto shift = [&](const FpVec& v) {
        FpVec w(ambient, 0);
        std::copy(v.begin(), v.end(), w.begin() + offset);
        return w;
    };
    for (const auto* b : blocks) {
        for (const auto& v : b->cycle_basis()) cycles.push_back(shift(v));
        for (const auto& v : b->boundary_basis()) boundaries.push_back(shift(v));
        offset += b->ambient_dim();
    }
    return Subquotient(p, ambient, std::move(cycles), std::move(boundaries));
}

Subquotient homology(const FpMatrix& d_out, const FpMatrix& d_in) {
    if (d_out.p() != d_in.p())
        throw std::invalid_argument("homology: prime mismatch");
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology: differentials do not compose");
    if (!multiply(d_out, d_in).is_zero())
        throw std::runtime_error("homology: composite differential is nonzero");
    Echelon cyc = rref(d_out.p(), d_out.cols(), kernel_basis(d_out));
    std::vector<FpVec> bnd = image_basis(d_in);
    return Subquotient(d_out.p(), d_out.cols(), std::move(cyc.rows), std::move(bnd));
}

FpMatrix induced_map(const Subquotient& src, const Subquotient& dst,
                     const FpMatrix& ambient) {
    if (src.p() != dst.p() || ambient.p() != src.p())
        throw std::invalid_argument("induced_map: prime mismatch");
    if (ambient.cols() != src.ambient_dim() || ambient.rows() != dst.ambient_dim())
        throw std::invalid_argument("induced_map: shape mismatch");
    for (const auto& cy : src.cycle_basis()) {
        if (!dst.contains_cycle(ambient.apply(cy)))
            throw std::runtime_error("induced_map: chain-map violation on cycles");
    }
    for (const auto& b : src.boundary_basis()) {
        if (!dst.is_boundary(ambient.apply(b)))
            throw std::runtime_error("induced_map: chain-map violation on boundaries");
    }
    std::vector<FpTriplet> t;
    for (int j = 0; j < src.dim(); ++j) {
        auto coords = dst.rep_coords(ambient.apply(src.reps()[j]));
        if (!coords)
            throw std::runtime_error("induced_map: image of representative is not a cycle");
        for (int i = 0; i < dst.dim(); ++i)
            if ((*coords)[i] != 0) t.push_back({i, j, (*coords)[i]});
    }
    return FpMatrix::from_triplets(src.p(), dst.dim(), src.dim(), std::move(t));
}

}  // namespace motivic
