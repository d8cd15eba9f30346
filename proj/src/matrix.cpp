#include "cb/matrix.hpp"

namespace cb {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

void Matrix::set(std::size_t r, std::size_t c, gf_elem v) {
    field_->check_elem(v);
    a_[r * cols_ + c] = v;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    if (field_->order() != rhs.field_->order())
        fail(Error::Kind::FieldMismatch, "matrix product over different fields");
    if (cols_ != rhs.rows_) fail(Error::Kind::BadDim, "matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            gf_elem v = at(i, t);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                gf_elem w = rhs.at(t, j);
                if (w == 0) continue;
                out.a_[i * rhs.cols_ + j] = f.add(out.a_[i * rhs.cols_ + j], f.mul(v, w));
            }
        }
    }
    return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) fail(Error::Kind::BadDim, "matrix power needs a square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) result = result.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = at(i, j);
    return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix w = *this;
    const Field& f = *field_;
    if (pivots) pivots->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && w.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(w.a_[row * cols_ + j], w.a_[piv * cols_ + j]);
        gf_elem scale = f.inv(w.at(row, col));
        for (std::size_t j = col; j < cols_; ++j)
            w.a_[row * cols_ + j] = f.mul(w.at(row, j), scale);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || w.at(i, col) == 0) continue;
            gf_elem factor = w.at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                w.a_[i * cols_ + j] = f.sub(w.at(i, j), f.mul(factor, w.at(row, j)));
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return w;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_->order() == rhs.field_->order() && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           a_ == rhs.a_;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

}  // namespace cb
