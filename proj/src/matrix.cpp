#include "kostka/matrix.hpp"

#include "kostka/errors.hpp"

namespace kostka {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, long order)
    : order_(order), rows_(rows), cols_(cols),
      e_(rows * cols, RationalFunction::zero(order)) {}

FieldMatrix FieldMatrix::identity(std::size_t n, long order) {
    FieldMatrix m(n, n, order);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one(order);
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw input_error("shape_mismatch", "matrix product shape mismatch");
    FieldMatrix out(rows_, rhs.cols_, order_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const RationalFunction& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const RationalFunction& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw input_error("shape_mismatch", "matrix difference shape mismatch");
    FieldMatrix out(rows_, cols_, order_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && !(at(i, j) == RationalFunction::one(order_))) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool FieldMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

FieldMatrix FieldMatrix::inverse(const std::string& context) const {
    if (rows_ != cols_)
        throw input_error("shape_mismatch", "inverse of non-square matrix");
    FieldMatrix a = *this;
    FieldMatrix inv = identity(rows_, order_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_)
            throw invariant_error("singular_matrix",
                                  "singular matrix" + (context.empty() ? "" : " (" + context + ")"));
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const RationalFunction p_inv = a.at(col, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            a.at(col, j) *= p_inv;
            inv.at(col, j) *= p_inv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const RationalFunction f = a.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

FieldMatrix FieldMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                   const std::vector<std::size_t>& col_idx) const {
    FieldMatrix out(row_idx.size(), col_idx.size(), order_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(i, j) = at(row_idx[i], col_idx[j]);
    return out;
}

} // namespace kostka
