#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "rlk/rational.hpp"

namespace rlk {

/// Dense matrix over Q, row-major. Zero rows or columns are legal so that
/// degenerate configurations (no cycles, no nodes) flow through unchanged.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<long>> grid);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<RationalVector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RationalVector row(int i) const;
    RationalVector col(int j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    RationalVector apply(const RationalVector& x) const;

    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_, cols_;
    RationalVector a_;
};

/// Unique reduced row-echelon form; same shape, zero rows at the bottom.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

/// Some particular x with m*x = b, or nullopt when the system is
/// inconsistent.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);

}  // namespace rlk
