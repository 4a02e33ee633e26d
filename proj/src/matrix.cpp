#include "rlk/matrix.hpp"

#include <utility>

#include "rlk/errors.hpp"

namespace rlk {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> grid) {
    rows_ = static_cast<int>(grid.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(grid.begin()->size());
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : grid) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long x : r) a_.emplace_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw DimensionMismatch("row length does not match column count");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalVector Matrix::row(int i) const {
    RationalVector r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RationalVector Matrix::col(int j) const {
    RationalVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
        }
    return p;
}

RationalVector Matrix::apply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    RationalVector y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix rref(const Matrix& m) {
    Matrix r = m;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (!r.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
        const Rational inv = Rational(1) / r.at(lead, col);
        for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            const Rational f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        ++lead;
    }
    return r;
}

int rank(const Matrix& m) {
    const Matrix r = rref(m);
    int count = 0;
    for (int i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) { nonzero = true; break; }
        if (nonzero) ++count;
    }
    return count;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("rhs length does not match row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const Matrix r = rref(aug);
    RationalVector x(m.cols());
    for (int i = 0; i < r.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j <= m.cols(); ++j)
            if (!r.at(i, j).is_zero()) { pivot = j; break; }
        if (pivot < 0) continue;
        if (pivot == m.cols()) return std::nullopt;  // 0 = 1 row
        x[pivot] = r.at(i, m.cols());
    }
    return x;
}

}  // namespace rlk
