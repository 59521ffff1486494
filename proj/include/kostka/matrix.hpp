#ifndef KOSTKA_MATRIX_HPP
#define KOSTKA_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kostka/ratfunc.hpp"

namespace kostka {

// Dense matrix over the rational function field Q(zeta_ell)(q).
class FieldMatrix {
public:
    FieldMatrix() : order_(1), rows_(0), cols_(0) {}
    FieldMatrix(std::size_t rows, std::size_t cols, long order);
    static FieldMatrix identity(std::size_t n, long order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long order() const { return order_; }

    RationalFunction& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const RationalFunction& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    FieldMatrix operator-(const FieldMatrix& rhs) const;
    bool operator==(const FieldMatrix&) const = default;

    bool is_identity() const;
    bool is_zero() const;

    // Exact Gauss-Jordan inverse; throws invariant_error with the given
    // context string on a singular input.
    FieldMatrix inverse(const std::string& context = "") const;

    FieldMatrix submatrix(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const;

private:
    long order_;
    std::size_t rows_, cols_;
    std::vector<RationalFunction> e_;
};

} // namespace kostka

#endif
