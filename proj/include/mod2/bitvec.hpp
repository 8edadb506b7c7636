#ifndef MOD2_BITVEC_HPP
#define MOD2_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mod2 {

/// Vector over GF(2), bit-packed into 64-bit words. Addition is XOR
/// (symmetric difference of support sets). Bits past `size()` stay zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static BitVector unit(std::size_t dim, std::size_t i) {
        BitVector v(dim);
        v.set(i);
        return v;
    }

    std::size_t size() const { return dim_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        if (value)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.dim_ != dim_) throw std::invalid_argument("BitVector dimension mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    BitVector& operator&=(const BitVector& o) {
        if (o.dim_ != dim_) throw std::invalid_argument("BitVector dimension mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }

    bool operator==(const BitVector& o) const { return dim_ == o.dim_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += std::size_t(std::popcount(w));
        return n;
    }

    /// Parity of the intersection with `o`; the GF(2) inner product.
    bool dot(const BitVector& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("BitVector dimension mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + std::size_t(std::countr_zero(words_[w]));
        return dim_;
    }

    std::vector<std::size_t> set_bits() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back((w << 6) + std::size_t(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    /// 0/1 string, lowest index first.
    std::string to_string() const {
        std::string s(dim_, '0');
        for (std::size_t i : set_bits()) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Total order compatible with equality; used for canonical sorting.
    bool operator<(const BitVector& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
        return false;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= dim_) throw std::out_of_range("BitVector index " + std::to_string(i) +
                                               " out of range " + std::to_string(dim_));
    }

    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2); every row has the same dimension.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t cols) : cols_(cols) {}
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }

    BitVector& row(std::size_t r) { return rows_.at(r); }
    const BitVector& row(std::size_t r) const { return rows_.at(r); }

    void add_row(BitVector v) {
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix row dimension mismatch");
        rows_.push_back(std::move(v));
    }

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    /// Matrix-vector product m * x, where rows act as linear functionals.
    BitVector apply(const BitVector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("BitMatrix apply dimension mismatch");
        BitVector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].dot(x)) out.set(r);
        return out;
    }

    /// Linear combination of rows with the given coefficient vector.
    BitVector combine(const BitVector& coeffs) const {
        if (coeffs.size() != rows_.size())
            throw std::invalid_argument("BitMatrix combine coefficient count mismatch");
        BitVector out(cols_);
        for (std::size_t r : coeffs.set_bits()) out ^= rows_[r];
        return out;
    }

    const std::vector<BitVector>& rows() const { return rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

} // namespace mod2

#endif
