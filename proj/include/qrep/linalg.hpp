#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Pivoting is deterministic: scanning columns left
/// to right, the first row at or below the current one with a nonzero entry
/// becomes the pivot row.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
    const F& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && k.is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        auto scale = k.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(scale, m(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || k.is_zero(m(i, col))) continue;
            auto factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!k.is_zero(m(row, j))) m(i, j) = k.sub(m(i, j), k.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank();
}

/// Columns form a basis of {x : m x = 0}. One basis vector per free column,
/// with a 1 in that free coordinate and zeros in the other free coordinates.
template <class F>
Matrix<F> nullspace_basis(const Matrix<F>& m) {
    const F& k = m.field();
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);

    Matrix<F> basis(k, m.cols(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        basis(free[j], j) = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = k.neg(r(i, free[j]));
    }
    return basis;
}

/// The pivot columns of m itself.
template <class F>
Matrix<F> colspace_basis(const Matrix<F>& m) {
    return m.select_columns(rref(m).pivots);
}

/// The unique X with c X = d. Requires independent columns in c and
/// col(d) inside col(c).
template <class F>
Matrix<F> solve_through(const Matrix<F>& c, const Matrix<F>& d) {
    if (c.rows() != d.rows())
        throw error(errc::shape_mismatch, "solve_through with " + c.shape() + " and " + d.shape());
    auto [r, pivots] = rref(hstack(c, d));
    std::size_t n = c.cols();
    std::size_t lead = 0;
    while (lead < pivots.size() && pivots[lead] < n) ++lead;
    if (lead < n) throw error(errc::not_injective, "columns of the " + c.shape() + " factor are dependent");
    if (pivots.size() > n) throw error(errc::no_solution, "right-hand side leaves the column space");
    Matrix<F> x(c.field(), n, d.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) x(i, j) = r(i, n + j);
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw error(errc::shape_mismatch, "inverse of " + m.shape());
    return solve_through(m, Matrix<F>::identity(m.field(), m.rows()));
}

template <class F>
typename F::value_type determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw error(errc::shape_mismatch, "determinant of " + m.shape());
    const F& k = m.field();
    auto det = k.one();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t r = c;
        while (r < m.rows() && k.is_zero(m(r, c))) ++r;
        if (r == m.rows()) return k.zero();
        if (r != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(c, j));
            det = k.neg(det);
        }
        det = k.mul(det, m(c, c));
        auto inv = k.inv(m(c, c));
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (k.is_zero(m(i, c))) continue;
            auto factor = k.mul(m(i, c), inv);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(c, j)));
        }
    }
    return det;
}

template <class F>
struct Quotient {
    Matrix<F> projection;  ///< (n - r) x n, nullspace exactly span(sub)
    Matrix<F> section;     ///< n x (n - r), projection * section = I
};

/// Quotient of F^ambient_dim by the span of the (independent) columns of sub.
/// The complement is the standard basis vectors not already in the span, in
/// index order.
template <class F>
Quotient<F> quotient_projection(const Matrix<F>& sub, std::size_t ambient_dim) {
    const F& k = sub.field();
    if (sub.rows() != ambient_dim)
        throw error(errc::shape_mismatch,
                    "subspace basis " + sub.shape() + " in ambient dimension " + std::to_string(ambient_dim));
    std::size_t r = sub.cols();
    auto ech = rref(hstack(sub, Matrix<F>::identity(k, ambient_dim)));
    std::size_t lead = 0;
    while (lead < ech.pivots.size() && ech.pivots[lead] < r) ++lead;
    if (lead < r) throw error(errc::dependent_columns, "subspace basis has dependent columns");

    std::vector<std::size_t> extra;
    for (std::size_t i = lead; i < ech.pivots.size(); ++i) extra.push_back(ech.pivots[i] - r);
    Matrix<F> section = Matrix<F>::identity(k, ambient_dim).select_columns(extra);
    Matrix<F> inv = inverse(hstack(sub, section));
    return {inv.select_rows(r, ambient_dim - r), std::move(section)};
}

} // namespace qrep
