#pragma once

#include <cstddef>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/matrix.hpp"

namespace qrep::detail {

/// A rows x cols matrix of unknowns laid out row-major from `offset` in the
/// flattened unknown vector.
struct Block {
    std::size_t offset = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t at(std::size_t r, std::size_t c) const { return offset + r * cols + c; }
    std::size_t size() const { return rows * cols; }
};

/// Homogeneous linear system collecting commuting-square conditions
/// X A - B Y = 0 between blocks of unknowns X and Y.
template <class F>
class SquareSystem {
public:
    using value_type = typename F::value_type;

    explicit SquareSystem(F field) : field_(std::move(field)) {}

    Block add_block(std::size_t rows, std::size_t cols) {
        Block b{unknowns_, rows, cols};
        unknowns_ += rows * cols;
        return b;
    }

    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return rows_.size(); }

    /// X: p x q, A: q x s, B: p x t, Y: t x s.
    void add_square(const Block& x, const Matrix<F>& a, const Matrix<F>& b, const Block& y) {
        const F& k = field_;
        for (std::size_t r = 0; r < x.rows; ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::vector<value_type> row(unknowns_, k.zero());
                for (std::size_t l = 0; l < x.cols; ++l) row[x.at(r, l)] = k.add(row[x.at(r, l)], a(l, c));
                for (std::size_t l = 0; l < b.cols(); ++l) row[y.at(l, c)] = k.sub(row[y.at(l, c)], b(r, l));
                rows_.push_back(std::move(row));
            }
    }

    Matrix<F> coefficients() const {
        Matrix<F> m(field_, rows_.size(), unknowns_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < unknowns_; ++j) m(i, j) = rows_[i][j];
        return m;
    }

    Matrix<F> solutions() const { return nullspace_basis(coefficients()); }

    /// Read block b out of column `col` of a matrix whose columns are
    /// flattened unknown vectors.
    static Matrix<F> extract(const Matrix<F>& vectors, std::size_t col, const Block& b) {
        Matrix<F> m(vectors.field(), b.rows, b.cols);
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c) m(r, c) = vectors(b.at(r, c), col);
        return m;
    }

private:
    F field_;
    std::size_t unknowns_ = 0;
    std::vector<std::vector<value_type>> rows_;
};

} // namespace qrep::detail
