#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ftre/gf2.hpp"

namespace ftre {

// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void xor_row(std::size_t dst, std::size_t src);       // row dst ^= row src
    void xor_row_from(std::size_t dst, const std::vector<word_t>& src);
    void swap_rows(std::size_t a, std::size_t b);
    std::size_t row_weight(std::size_t r) const;
    std::vector<word_t> row_words(std::size_t r) const;

    std::size_t rank() const;

    // Basis of { v : M v^T = 0 }, one kernel vector per returned row.
    BitMatrix kernel_basis() const;

    // M multiplied by the transpose of o: (rows x o.rows) products.
    BitMatrix times_transpose(const BitMatrix& o) const;
    bool is_zero() const;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<word_t> bits_;

    friend class Echelon;
};

/*
 * Row-echelon form of a matrix with pivot bookkeeping; supports membership
 * tests of vectors in the row space.
 */
class Echelon {
  public:
    explicit Echelon(const BitMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    // Reduce v (packed, same column count) by the echelon rows in place;
    // returns true when v lies in the row space (reduces to zero).
    bool reduce(std::vector<word_t>& v) const;
    bool contains(const std::vector<word_t>& v) const;

  private:
    std::size_t cols_ = 0, wpr_ = 0;
    std::vector<std::vector<word_t>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace ftre
