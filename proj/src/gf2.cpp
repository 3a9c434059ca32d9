#include "cobarext/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gf2 {

namespace {

// Below this many row-words the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelWorkThreshold = 1u << 14;

// In-place row echelon. Returns the pivot (row, col) pairs in elimination
// order. If `reduce` is set the matrix ends in reduced row echelon form.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(BitMatrix& m, bool reduce) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(next_row, pivot);
        const std::size_t work = (m.rows() - next_row) * m.stride();
#pragma omp parallel for schedule(static) if (work > kParallelWorkThreshold)
        for (std::ptrdiff_t r = std::ptrdiff_t(next_row) + 1; r < std::ptrdiff_t(m.rows()); ++r) {
            if (m.get(std::size_t(r), col)) m.xor_row(std::size_t(r), next_row);
        }
        if (reduce) {
#pragma omp parallel for schedule(static) if (work > kParallelWorkThreshold)
            for (std::ptrdiff_t r = 0; r < std::ptrdiff_t(next_row); ++r) {
                if (m.get(std::size_t(r), col)) m.xor_row(std::size_t(r), next_row);
            }
        }
        pivots.emplace_back(next_row, col);
        ++next_row;
    }
    return pivots;
}

}  // namespace

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto* ra = row(a);
    auto* rb = row(b);
    for (std::size_t i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const auto* p = row(r);
    for (std::size_t i = 0; i < stride_; ++i)
        if (p[i]) return false;
    return true;
}

bool BitMatrix::is_zero() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = bits_[r * stride_ + w];
            while (word) {
                const int b = __builtin_ctzll(word);
                word &= word - 1;
                out.set(w * 64 + std::size_t(b), r, true);
            }
        }
    return out;
}

BitMatrix BitMatrix::multiplied(const BitMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("BitMatrix::multiplied: dimension mismatch");
    BitMatrix out(rows_, other.cols());
    for (std::size_t r = 0; r < rows_; ++r) {
        auto* dst = out.row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = bits_[r * stride_ + w];
            while (word) {
                const int b = __builtin_ctzll(word);
                word &= word - 1;
                const auto* src = other.row(w * 64 + std::size_t(b));
                for (std::size_t i = 0; i < out.stride(); ++i) dst[i] ^= src[i];
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> BitMatrix::apply(const std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> out(words_for(rows_), 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const auto* p = row(r);
        for (std::size_t i = 0; i < stride_; ++i) acc ^= p[i] & v[i];
        if (__builtin_popcountll(acc) & 1) out[r / 64] |= std::uint64_t(1) << (r % 64);
    }
    return out;
}

std::size_t rank(BitMatrix m) { return echelonize(m, false).size(); }

BitMatrix kernel_basis(const BitMatrix& m) {
    BitMatrix work = m;
    auto pivots = echelonize(work, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    const std::size_t dim = m.cols() - pivots.size();
    BitMatrix out(dim, m.cols());
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set(k, free_col, true);
        for (auto [r, c] : pivots)
            if (work.get(r, free_col)) out.set(k, c, true);
        ++k;
    }
    return out;
}

std::size_t homology_dim(const BitMatrix& d_out, const BitMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_dim: middle space dimensions disagree");
    if (!d_out.multiplied(d_in).is_zero())
        throw std::invalid_argument("homology_dim: d_out * d_in != 0");
    const std::size_t cycles = d_out.cols() - rank(d_out);
    return cycles - rank(d_in);
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    std::copy(top.words().begin(), top.words().end(), out.words().begin());
    std::copy(bottom.words().begin(), bottom.words().end(), out.words().begin() + std::ptrdiff_t(top.rows() * top.stride()));
    return out;
}

std::size_t rank_modulo(const BitMatrix& extra, const BitMatrix& modulo) {
    return rank(vstack(modulo, extra)) - rank(modulo);
}

std::size_t induced_map_rank(const BitMatrix& dA_out, const BitMatrix& dA_in,
                             const BitMatrix& dB_out, const BitMatrix& dB_in,
                             const BitMatrix& chain_map) {
    if (chain_map.cols() != dA_out.cols() || chain_map.rows() != dB_out.cols())
        throw std::invalid_argument("induced_map_rank: chain map dimensions disagree");
    if (dA_out.cols() != dA_in.rows() || dB_out.cols() != dB_in.rows())
        throw std::invalid_argument("induced_map_rank: complex dimensions disagree");
    if (!dA_out.multiplied(dA_in).is_zero() || !dB_out.multiplied(dB_in).is_zero())
        throw std::invalid_argument("induced_map_rank: input complexes do not compose to zero");

    const BitMatrix cyclesA = kernel_basis(dA_out);  // rows span ker dA_out
    // images of the A-cycles in the middle of B, as rows
    BitMatrix mapped(cyclesA.rows(), dB_out.cols());
    for (std::size_t i = 0; i < cyclesA.rows(); ++i) {
        std::vector<std::uint64_t> v(cyclesA.row(i), cyclesA.row(i) + cyclesA.stride());
        auto img = chain_map.apply(v);
        std::copy(img.begin(), img.end(), mapped.row(i));
        auto boundary = dB_out.apply(img);
        for (auto w : boundary)
            if (w) throw std::invalid_argument("induced_map_rank: chain map does not carry cycles to cycles");
    }
    return rank_modulo(mapped, dB_in.transposed());
}

}  // namespace gf2
