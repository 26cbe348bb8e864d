#pragma once

#include <initializer_list>
#include <vector>

#include "cospec/errors.hpp"
#include "cospec/numbers.hpp"

namespace cospec {

/// Dense matrix over arbitrary-precision rationals. All arithmetic is exact.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);
    static ExactMatrix ones(int rows, int cols);
    static ExactMatrix from_int(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_integral() const;

    ExactMatrix transpose() const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rat& f) const;
    bool operator==(const ExactMatrix& o) const = default;

    /// Entries copied in the given row/column order; indices may repeat or
    /// reorder. Throws IndexError on out-of-range indices.
    ExactMatrix submatrix(const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// B_1 (+) B_2 (+) ... (+) B_k; all blocks must be square.
ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks);

std::string matrix_to_string(const ExactMatrix& m);

}  // namespace cospec
