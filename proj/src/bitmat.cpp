#include "ftre/bitmat.hpp"

#include <bit>
#include <stdexcept>

namespace ftre {

namespace {
constexpr std::size_t kWordBits = 64;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + kWordBits - 1) / kWordBits), bits_(rows * wpr_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    word_t mask = word_t(1) << (c % kWordBits);
    if (v)
        bits_[r * wpr_ + c / kWordBits] |= mask;
    else
        bits_[r * wpr_ + c / kWordBits] &= ~mask;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < wpr_; ++w)
        bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

void BitMatrix::xor_row_from(std::size_t dst, const std::vector<word_t>& src) {
    for (std::size_t w = 0; w < wpr_; ++w)
        bits_[dst * wpr_ + w] ^= src[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t wt = 0;
    for (std::size_t w = 0; w < wpr_; ++w)
        wt += std::popcount(bits_[r * wpr_ + w]);
    return wt;
}

std::vector<word_t> BitMatrix::row_words(std::size_t r) const {
    return {bits_.begin() + r * wpr_, bits_.begin() + (r + 1) * wpr_};
}

std::size_t BitMatrix::rank() const {
    return Echelon(*this).rank();
}

BitMatrix BitMatrix::kernel_basis() const {
    // Eliminate a working copy, track pivot columns, then read one kernel
    // vector off each free column.
    BitMatrix m = *this;
    std::vector<std::size_t> pivot_row_of_col(cols_, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
        std::size_t p = next;
        while (p < rows_ && !m.get(p, c))
            ++p;
        if (p == rows_)
            continue;
        m.swap_rows(next, p);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next && m.get(r, c))
                m.xor_row(r, next);
        pivot_row_of_col[c] = next;
        ++next;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_row_of_col[c] == SIZE_MAX)
            free_cols.push_back(c);

    BitMatrix basis(free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis.set(i, fc, true);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t pr = pivot_row_of_col[c];
            if (pr != SIZE_MAX && m.get(pr, fc))
                basis.set(i, c, true);
        }
    }
    return basis;
}

BitMatrix BitMatrix::times_transpose(const BitMatrix& o) const {
    if (cols_ != o.cols_)
        throw std::invalid_argument("column counts differ");
    BitMatrix out(rows_, o.rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < o.rows_; ++j) {
            word_t acc = 0;
            for (std::size_t w = 0; w < wpr_; ++w)
                acc ^= bits_[i * wpr_ + w] & o.bits_[j * o.wpr_ + w];
            out.set(i, j, std::popcount(acc) & 1);
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (word_t w : bits_)
        if (w) return false;
    return true;
}

Echelon::Echelon(const BitMatrix& m) : cols_(m.cols()), wpr_(m.wpr_) {
    std::vector<std::vector<word_t>> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        work.push_back(m.row_words(r));

    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < work.size(); ++c) {
        std::size_t wi = c / kWordBits;
        word_t mask = word_t(1) << (c % kWordBits);
        std::size_t p = next;
        while (p < work.size() && !(work[p][wi] & mask))
            ++p;
        if (p == work.size())
            continue;
        std::swap(work[next], work[p]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != next && (work[r][wi] & mask))
                for (std::size_t w = 0; w < wpr_; ++w)
                    work[r][w] ^= work[next][w];
        }
        pivots_.push_back(c);
        ++next;
    }
    rows_.assign(work.begin(), work.begin() + next);
}

bool Echelon::reduce(std::vector<word_t>& v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        std::size_t c = pivots_[i];
        if ((v[c / kWordBits] >> (c % kWordBits)) & 1)
            for (std::size_t w = 0; w < wpr_; ++w)
                v[w] ^= rows_[i][w];
    }
    for (word_t w : v)
        if (w) return false;
    return true;
}

bool Echelon::contains(const std::vector<word_t>& v) const {
    std::vector<word_t> tmp = v;
    return reduce(tmp);
}

} // namespace ftre
