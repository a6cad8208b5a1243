#pragma once

/*
 * Dense matrices over the rationals with exact rank, nullspace and solve.
 *
 * rank() clears denominators row-wise and runs fraction-free (Bareiss)
 * elimination over the integers, which keeps intermediate entries as minors
 * of the cleared matrix instead of letting gcd-free fractions grow. solve()
 * and nullspaceBasis() use plain rational Gauss-Jordan; everything is exact.
 */

#include "recipalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace recipalg {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix fromRows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t nr = rows.size();
        const std::size_t nc = nr == 0 ? 0 : rows.front().size();
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i) {
            if (rows[i].size() != nc)
                throw std::invalid_argument("ragged rows in Matrix::fromRows");
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void swapRows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

// Exact rank over Q via fraction-free elimination with column pivoting.
inline std::size_t rank(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0)
        return 0;

    // Clear denominators per row; row scaling does not change the rank.
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            l = lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }

    BigInt prev = 1;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t pivot = rk;
        while (pivot < nr && a[pivot][col] == 0)
            ++pivot;
        if (pivot == nr)
            continue;
        std::swap(a[pivot], a[rk]);
        for (std::size_t i = rk + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                a[i][j] = (a[rk][col] * a[i][j] - a[i][col] * a[rk][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

namespace detail {

// Reduced row echelon form in place; returns the pivot column indices.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swapRows(pivot, r);
        const Rational inv = Rational(1) / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0)
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

inline std::vector<std::vector<Rational>> nullspaceFromRref(
    const Matrix& r, const std::vector<std::size_t>& pivots, std::size_t cols) {
    std::vector<bool> isPivot(cols, false);
    for (std::size_t c : pivots)
        isPivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol])
            continue;
        std::vector<Rational> v(cols);
        v[freeCol] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, freeCol);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

// Canonical basis of {x : m x = 0}, one vector per free column of the rref.
inline std::vector<std::vector<Rational>> nullspaceBasis(const Matrix& m) {
    Matrix r = m;
    const auto pivots = detail::rref(r);
    return detail::nullspaceFromRref(r, pivots, m.cols());
}

struct LinearSolution {
    std::vector<Rational> particular;             // free variables set to zero
    std::vector<std::vector<Rational>> nullspace; // empty unless requested
};

// One exact solution of m x = rhs, or nullopt when the system is inconsistent.
inline std::optional<LinearSolution> solve(const Matrix& m, const std::vector<Rational>& rhs,
                                           bool wantNullspace = false) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length does not match row count");

    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    const auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(m.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        sol.particular[pivots[k]] = aug(k, m.cols());
    if (wantNullspace)
        sol.nullspace = detail::nullspaceFromRref(aug, pivots, m.cols());
    return sol;
}

} // namespace recipalg
