#include "mod2/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mod2::gf2 {

namespace {

// Work size below which forking threads costs more than the sweep itself.
constexpr std::size_t kParallelMinRows = 128;
constexpr std::size_t kParallelMinWords = 4;

template <bool Parallel>
Echelon eliminate(BitMatrix m, bool track_ops) {
    const std::size_t nrows = m.row_count();
    const std::size_t ncols = m.col_count();

    Echelon e;
    e.has_ops = track_ops;
    if (track_ops) {
        e.ops = BitMatrix(nrows, nrows);
        for (std::size_t r = 0; r < nrows; ++r) e.ops.row(r).set(r);
    }

    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (m.row(i).test(c)) {
                pivot = i;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != r) {
            std::swap(m.row(pivot), m.row(r));
            if (track_ops) std::swap(e.ops.row(pivot), e.ops.row(r));
        }

        // Clear column c from every other row; the data-parallel sweep.
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = 0; i < (long long)nrows; ++i) {
                if ((std::size_t)i != r && m.row(i).test(c)) {
                    m.row(i) ^= m.row(r);
                    if (track_ops) e.ops.row(i) ^= e.ops.row(r);
                }
            }
        } else {
            for (std::size_t i = 0; i < nrows; ++i) {
                if (i != r && m.row(i).test(c)) {
                    m.row(i) ^= m.row(r);
                    if (track_ops) e.ops.row(i) ^= e.ops.row(r);
                }
            }
        }

        e.pivot_col.push_back(c);
        ++r;
    }

    e.rank = r;
    e.mat = std::move(m);
    return e;
}

} // namespace

Echelon rref_serial(BitMatrix m, bool track_ops) { return eliminate<false>(std::move(m), track_ops); }

Echelon rref_parallel(BitMatrix m, bool track_ops) { return eliminate<true>(std::move(m), track_ops); }

Echelon rref(BitMatrix m, bool track_ops) {
    const std::size_t words = (m.col_count() + 63) / 64;
    if (m.row_count() >= kParallelMinRows && words >= kParallelMinWords)
        return rref_parallel(std::move(m), track_ops);
    return rref_serial(std::move(m), track_ops);
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.col_count(), m.row_count());
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (std::size_t c : m.row(r).set_bits()) t.row(c).set(r);
    return t;
}

std::optional<BitVector> solve_with(const Echelon& e, const BitVector& target) {
    if (!e.has_ops)
        throw std::invalid_argument("solve_with: echelon was computed without ops");
    if (target.size() != e.mat.col_count())
        throw std::invalid_argument("solve_with: target dimension mismatch");
    BitVector residue = target;
    BitVector coeffs(e.ops.col_count());
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (residue.test(e.pivot_col[r])) {
            residue ^= e.mat.row(r);
            coeffs ^= e.ops.row(r);
        }
    }
    if (residue.any()) return std::nullopt;
    return coeffs;
}

std::optional<BitVector> solve_in_span(const BitMatrix& m, const BitVector& target) {
    if (target.size() != m.col_count())
        throw std::invalid_argument("solve_in_span: target dimension mismatch");
    return solve_with(rref(m, /*track_ops=*/true), target);
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.col_count();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < e.rank; ++r) is_pivot[e.pivot_col[r]] = true;

    BitMatrix basis(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector x(n);
        x.set(f);
        for (std::size_t r = 0; r < e.rank; ++r)
            if (e.mat.row(r).test(f)) x.set(e.pivot_col[r]);
        basis.add_row(std::move(x));
    }
    return basis;
}

BitMatrix left_kernel(const BitMatrix& m) { return kernel_basis(transpose(m)); }

BitVector Span::reduce(BitVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("Span: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.test(pivots_[i])) v ^= rows_[i];
    return v;
}

bool Span::add(BitVector v) {
    v = reduce(std::move(v));
    std::size_t p = v.first_set();
    if (p == v.size()) return false;
    // Keep rows reduced against each other so pivots stay unique.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].test(p)) rows_[i] ^= v;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t at = std::size_t(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + long(at), std::move(v));
    return true;
}

BitMatrix fixed_subspace(const BitMatrix& basis,
                         const std::function<BitVector(const BitVector&)>& f) {
    // x = sum c_i b_i is fixed iff sum c_i (b_i + f(b_i)) == 0.
    BitMatrix moved(basis.col_count());
    for (std::size_t r = 0; r < basis.row_count(); ++r)
        moved.add_row(basis.row(r) ^ f(basis.row(r)));
    BitMatrix coeffs = left_kernel(moved);
    BitMatrix out(basis.col_count());
    for (std::size_t r = 0; r < coeffs.row_count(); ++r)
        out.add_row(basis.combine(coeffs.row(r)));
    return out;
}

std::string power_of_two_decimal(std::size_t exponent) {
    std::string digits = "1"; // little-endian decimal
    for (std::size_t i = 0; i < exponent; ++i) {
        int carry = 0;
        for (char& d : digits) {
            int v = (d - '0') * 2 + carry;
            d = char('0' + v % 10);
            carry = v / 10;
        }
        if (carry) digits.push_back(char('0' + carry));
    }
    return std::string(digits.rbegin(), digits.rend());
}

} // namespace mod2::gf2
