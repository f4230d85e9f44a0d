#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivic {

// Exact arithmetic in F_p for odd p < 2^16.  Residues are stored in [0, p).
using Fp = std::uint32_t;
using FpVec = std::vector<Fp>;

inline Fp fp_add(Fp a, Fp b, Fp p) { Fp s = a + b; return s >= p ? s - p : s; }
inline Fp fp_sub(Fp a, Fp b, Fp p) { return a >= b ? a - b : a + p - b; }
inline Fp fp_neg(Fp a, Fp p) { return a == 0 ? 0 : p - a; }
inline Fp fp_mul(Fp a, Fp b, Fp p) {
    return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p);
}
Fp fp_inv(Fp a, Fp p);
// Reduces an arbitrary integer (signs included) to [0, p).
Fp fp_from(long long v, Fp p);

struct FpTriplet {
    int row = 0;
    int col = 0;
    Fp val = 0;
};

// Sparse matrix over F_p.  Entries are kept sorted row-major with no zeros
// and no duplicate positions, so equal matrices have equal representations.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(Fp p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {}
    static FpMatrix from_triplets(Fp p, int rows, int cols, std::vector<FpTriplet> t);
    static FpMatrix identity(Fp p, int n);

    Fp p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<FpTriplet>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Fp at(int r, int c) const;
    FpVec apply(const FpVec& v) const;  // matrix * column vector
    FpMatrix transpose() const;

    bool operator==(const FpMatrix& o) const;

  private:
    Fp p_ = 3;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FpTriplet> entries_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);

// Reduced row echelon form of the row space.  RREF is unique, so every
// basis this module hands out is canonical regardless of pivot strategy.
// Rows are dense vectors of length `cols`.
struct Echelon {
    Fp p = 3;
    int cols = 0;
    std::vector<FpVec> rows;      // nonzero rows, ascending pivot column
    std::vector<int> pivot_cols;  // pivot column of each row
};

Echelon rref(Fp p, int cols, const std::vector<FpVec>& rows);

int rank(const FpMatrix& m);
// Kernel in the standard free-column form: one vector per non-pivot column,
// with a 1 in that column.  Derived from the (unique) RREF.
std::vector<FpVec> kernel_basis(const FpMatrix& m);
// Canonical basis of the column space: RREF rows of the transpose.
std::vector<FpVec> image_basis(const FpMatrix& m);

// A subquotient span(cycles)/span(boundaries) of F_p^ambient_dim together
// with a canonical set of representatives for the quotient basis.
// cycle/boundary bases are RREF rows; reps extend the boundary echelon to
// the cycle space, so boundaries + reps have pairwise distinct pivots.
class Subquotient {
  public:
    Subquotient() = default;
    Subquotient(Fp p, int ambient_dim,
                std::vector<FpVec> cycle_rref, std::vector<FpVec> boundary_rref);

    Fp p() const { return p_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<FpVec>& cycle_basis() const { return cycles_; }
    const std::vector<FpVec>& boundary_basis() const { return boundaries_; }
    const std::vector<FpVec>& reps() const { return reps_; }

    // Writes v as (rep combination) + boundary; nullopt if v is not a cycle.
    std::optional<FpVec> rep_coords(const FpVec& v) const;
    bool contains_cycle(const FpVec& v) const;
    bool is_boundary(const FpVec& v) const;

    // Direct sum with coordinate offsets; used to assemble block-diagonal
    // complexes.  Blocks must share p.
    static Subquotient direct_sum(Fp p, const std::vector<const Subquotient*>& blocks);

  private:
    struct Row {
        FpVec v;
        int pivot = -1;
        int rep_index = -1;  // >= 0 when the row is a quotient representative
    };
    void index_rows();

    Fp p_ = 3;
    int ambient_ = 0;
    std::vector<FpVec> cycles_;
    std::vector<FpVec> boundaries_;
    std::vector<FpVec> reps_;
    std::vector<Row> reduction_rows_;   // boundaries then reps, distinct pivots
    std::vector<int> pivot_to_row_;     // column -> reduction row, -1 if none
    std::vector<Row> cycle_rows_;       // cycle RREF rows for membership tests
    std::vector<int> cycle_pivot_to_row_;
};

// Homology ker(d_out)/im(d_in) at the middle term of
//   source --d_in--> middle --d_out--> target.
// Throws if the shapes do not compose or if d_out * d_in != 0.
Subquotient homology(const FpMatrix& d_out, const FpMatrix& d_in);

// Matrix of the map induced on homology by `ambient` (middle-level map).
// Checks that ambient carries src cycles into dst cycles and src boundaries
// into dst boundaries; throws on violation.
FpMatrix induced_map(const Subquotient& src, const Subquotient& dst,
                     const FpMatrix& ambient);

}  // namespace motivic
