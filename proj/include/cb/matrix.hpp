#ifndef CB_MATRIX_HPP
#define CB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cb/gf.hpp"

namespace cb {

/// Dense row-major matrix over a fixed finite field.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gf_elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, gf_elem v);

    Matrix mul(const Matrix& rhs) const;  ///< throws FieldMismatch / BadDim
    Matrix pow(std::uint64_t e) const;    ///< square matrices only
    Matrix transpose() const;

    /// Rank by Gaussian elimination on a scratch copy.
    std::size_t rank() const;

    /// Reduced row echelon form and the pivot column list.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    static Matrix identity(FieldPtr field, std::size_t n);

   private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<gf_elem> a_;
};

}  // namespace cb

#endif
