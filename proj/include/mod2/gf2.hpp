#ifndef MOD2_GF2_HPP
#define MOD2_GF2_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mod2/bitvec.hpp"

namespace mod2::gf2 {

/// Result of Gauss-Jordan elimination. `mat` is in reduced row echelon form;
/// `pivot_col[r]` gives the pivot column of row r (rows beyond `rank` are zero).
/// When requested, `ops.row(r)` holds coefficients over the ORIGINAL rows that
/// produce `mat.row(r)`.
struct Echelon {
    BitMatrix mat;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    BitMatrix ops;
    bool has_ops = false;
};

/// Reference implementation: plain Gauss-Jordan with first-set-bit pivoting.
Echelon rref_serial(BitMatrix m, bool track_ops = false);

/// Same elimination with the row-update sweep parallelized across rows.
Echelon rref_parallel(BitMatrix m, bool track_ops = false);

/// Dispatches to the parallel kernel when the matrix is large enough to pay
/// for thread startup, to the serial one otherwise. Both produce the same RREF.
Echelon rref(BitMatrix m, bool track_ops = false);

std::size_t rank(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

/// Coefficients c (over the rows of m) with sum_i c_i * row_i == target,
/// or nullopt when target is outside the row space.
std::optional<BitVector> solve_in_span(const BitMatrix& m, const BitVector& target);

/// Same solve against a precomputed echelon (must carry ops); useful when
/// many targets are tested against one row space.
std::optional<BitVector> solve_with(const Echelon& e, const BitVector& target);

/// Basis of the right kernel {x : m.apply(x) == 0}. Row count equals
/// col_count(m) - rank(m).
BitMatrix kernel_basis(const BitMatrix& m);

/// Basis of the left kernel {c : c * m == 0}, i.e. coefficient vectors of
/// vanishing row combinations.
BitMatrix left_kernel(const BitMatrix& m);

/// Incremental row space: feed vectors one at a time, query rank and residues.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Residue of v modulo the current span (v reduced against all pivots).
    BitVector reduce(BitVector v) const;

    /// Inserts v if independent of the current span; returns true when the
    /// rank grew.
    bool add(BitVector v);

    bool contains(const BitVector& v) const { return reduce(v).none(); }

    const std::vector<BitVector>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<BitVector> rows_;        // kept reduced, sorted by pivot
    std::vector<std::size_t> pivots_;
};

/// Basis of the subspace {x in rowspace(basis) : f(x) == x} for a linear
/// involution-like map f on the ambient space. Rows of the result are actual
/// fixed vectors, not coefficient tuples.
BitMatrix fixed_subspace(const BitMatrix& basis,
                         const std::function<BitVector(const BitVector&)>& f);

/// Decimal rendering of 2^exponent (exact, any exponent).
std::string power_of_two_decimal(std::size_t exponent);

} // namespace mod2::gf2

#endif
