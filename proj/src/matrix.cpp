#include "cospec/matrix.hpp"

#include <sstream>

namespace cospec {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (Rat& v : m.a_) v = 1;
    return m;
}

ExactMatrix ExactMatrix::from_int(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw ShapeError("ragged row in from_int");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

bool ExactMatrix::is_integral() const {
    for (const Rat& v : a_)
        if (!cospec::is_integral(v)) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix addition shape mismatch");
    ExactMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix subtraction shape mismatch");
    ExactMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    Rat term;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rat& f = at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& g = o.at(k, j);
                if (g == 0) continue;
                term = f;
                term *= g;
                r.at(i, j) += term;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rat& f) const {
    ExactMatrix r = *this;
    for (Rat& v : r.a_) v *= f;
    return r;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& row_idx,
                                   const std::vector<int>& col_idx) const {
    for (int r : row_idx)
        if (r < 0 || r >= rows_) throw IndexError("submatrix row index out of range");
    for (int c : col_idx)
        if (c < 0 || c >= cols_) throw IndexError("submatrix column index out of range");
    ExactMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
}

ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks) {
    int n = 0;
    for (const ExactMatrix& b : blocks) {
        if (!b.square()) throw ShapeError("block_diag requires square blocks");
        n += b.rows();
    }
    ExactMatrix m(n, n);
    int off = 0;
    for (const ExactMatrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

std::string matrix_to_string(const ExactMatrix& m) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<size_t>(m.rows()) * m.cols());
    size_t width = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells.push_back(to_string(m.at(i, j)));
            width = std::max(width, cells.back().size());
        }
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * m.cols() + j];
            out << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cospec
