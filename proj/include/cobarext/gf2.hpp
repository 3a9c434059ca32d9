#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gf2 {

// Dense bit-packed matrix over the two-element field. Rows are stored as
// contiguous 64-bit words; padding bits beyond `cols` are kept at zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        auto& word = bits_[r * stride_ + c / 64];
        if (v)
            word |= mask;
        else
            word &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / 64] ^= std::uint64_t(1) << (c % 64); }

    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * stride_; }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * stride_; }

    // dst ^= src, whole rows
    void xor_row(std::size_t dst, std::size_t src) {
        auto* d = row(dst);
        const auto* s = row(src);
        for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b);

    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;

    BitMatrix transposed() const;
    // matrix product over F2: (*this) * other
    BitMatrix multiplied(const BitMatrix& other) const;
    // this * v for a column vector packed in `v` (length words_for(cols))
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

    bool operator==(const BitMatrix& other) const = default;

    const std::vector<std::uint64_t>& words() const { return bits_; }
    std::vector<std::uint64_t>& words() { return bits_; }

    static std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// F2 row rank. Gaussian elimination with deterministic pivoting (lowest
// remaining row, lowest column); word-level XOR, OpenMP-assisted for large
// matrices.
std::size_t rank(BitMatrix m);

// Basis of the right kernel {v : m v = 0}; one basis vector per row of the
// result, cols(result) = cols(m), rows(result) = cols(m) - rank(m).
// Deterministic: free columns in increasing order.
BitMatrix kernel_basis(const BitMatrix& m);

// dim ker(d_out) - rank(d_in) for a three-term complex
//   . --d_in--> middle --d_out--> .
// Throws std::invalid_argument unless cols(d_out) == rows(d_in) and
// d_out * d_in == 0.
std::size_t homology_dim(const BitMatrix& d_out, const BitMatrix& d_in);

// Rank of the map induced on homology by a chain map between two three-term
// complexes. chain_map carries the middle space of A to the middle space of
// B; it must send cycles to cycles (checked), otherwise throws.
std::size_t induced_map_rank(const BitMatrix& dA_out, const BitMatrix& dA_in,
                             const BitMatrix& dB_out, const BitMatrix& dB_in,
                             const BitMatrix& chain_map);

// Stack the rows of two matrices with equal column count.
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

// Rank of the rows of `extra` taken modulo the row space of `modulo`:
// rank([modulo; extra]) - rank(modulo).
std::size_t rank_modulo(const BitMatrix& extra, const BitMatrix& modulo);

}  // namespace gf2
