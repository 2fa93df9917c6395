#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/field.hpp"

namespace qrep {

/// Dense row-major matrix over the field F. A matrix with rows x cols acts on
/// column vectors: it is a linear map F^cols -> F^rows. Zero-row and
/// zero-column matrices are ordinary values (maps to or from the zero space).
template <class F>
class Matrix {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Build from integer literals; convenient for tests and fixed data.
    static Matrix from_ints(const F& field, std::initializer_list<std::initializer_list<long>> rows,
                            std::size_t cols_if_empty = 0) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : cols_if_empty;
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw error(errc::shape_mismatch, "ragged matrix literal");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = field.from_integer(integer(v));
            ++i;
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_columns(const std::vector<std::size_t>& columns) const {
        Matrix s(field_, rows_, columns.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < columns.size(); ++j) s(i, j) = (*this)(i, columns[j]);
        return s;
    }

    Matrix select_rows(std::size_t first, std::size_t count) const {
        Matrix s(field_, count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(first + i, j);
        return s;
    }

    Matrix scaled(const value_type& lambda) const {
        Matrix s = *this;
        for (auto& v : s.data_) v = field_.mul(lambda, v);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_ || !(a.field_ == b.field_))
            throw error(errc::shape_mismatch, "product of " + a.shape() + " by " + b.shape());
        const F& k = a.field_;
        Matrix c(k, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const value_type& x = a(i, l);
                if (k.is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
        return c;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    /// `[[1, 2/3], [0, -1]]`; zero rows print as `[]`, zero columns as `[[], []]`.
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += ", ";
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += field_.to_string((*this)(i, j));
            }
            s += "]";
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_ || !(field_ == b.field_))
            throw error(errc::shape_mismatch, "sum of " + shape() + " and " + b.shape());
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

template <class F>
Matrix<F> block_diag(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw error(errc::shape_mismatch, "hstack of " + a.shape() + " and " + b.shape());
    Matrix<F> m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw error(errc::shape_mismatch, "vstack of " + a.shape() + " and " + b.shape());
    Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

} // namespace qrep
