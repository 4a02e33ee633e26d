#include "rlk/subspace.hpp"

#include <algorithm>

#include "rlk/errors.hpp"

namespace rlk {

Subspace Subspace::span(int ambient_dim, const std::vector<RationalVector>& vectors) {
    Subspace s;
    s.ambient_ = ambient_dim;
    if (vectors.empty()) return s;
    const Matrix r = rref(Matrix::from_rows(vectors, ambient_dim));
    for (int i = 0; i < r.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) { pivot = j; break; }
        if (pivot < 0) break;  // zero rows are at the bottom
        s.basis_.push_back(r.row(i));
        s.pivots_.push_back(pivot);
    }
    return s;
}

Subspace Subspace::zero(int ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    for (int i = 0; i < ambient_dim; ++i) {
        RationalVector e(ambient_dim);
        e[i] = Rational(1);
        s.basis_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

bool Subspace::contains(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DimensionMismatch("vector length does not match ambient dimension");
    // Reduce v against the canonical basis; v is a member iff the residue
    // vanishes. Pivot coordinates read off the unique candidate coefficients.
    RationalVector residue = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = residue[pivots_[i]];
        if (c.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j) residue[j] -= c * basis_[i][j];
    }
    return std::all_of(residue.begin(), residue.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw DimensionMismatch("ambient dimensions differ");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const RationalVector& v) { return contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

Subspace image(const Matrix& m) {
    std::vector<RationalVector> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(m.rows(), cols);
}

Subspace kernel(const Matrix& m) {
    const int n = m.cols();
    const Matrix r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<RationalVector> gens;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        RationalVector v(n);
        v[j] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(static_cast<int>(i), j);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("ambient dimensions differ");
    return a == b;
}

Matrix constraints(const Subspace& s) {
    // f vanishes on s iff B f = 0 for the basis matrix B.
    return kernel(s.basis_matrix()).basis_matrix();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("ambient dimensions differ");
    const Matrix ca = constraints(a);
    const Matrix cb = constraints(b);
    Matrix stacked(ca.rows() + cb.rows(), a.ambient_dim());
    for (int i = 0; i < ca.rows(); ++i)
        for (int j = 0; j < ca.cols(); ++j) stacked.at(i, j) = ca.at(i, j);
    for (int i = 0; i < cb.rows(); ++i)
        for (int j = 0; j < cb.cols(); ++j) stacked.at(ca.rows() + i, j) = cb.at(i, j);
    return kernel(stacked);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("ambient dimensions differ");
    std::vector<RationalVector> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), gens);
}

bool membership(const RationalVector& v, const Subspace& s) { return s.contains(v); }

Subspace coordinate_complement(const Subspace& s) {
    std::vector<bool> is_pivot(s.ambient_dim(), false);
    for (int p : s.pivots()) is_pivot[p] = true;
    std::vector<RationalVector> gens;
    for (int j = 0; j < s.ambient_dim(); ++j) {
        if (is_pivot[j]) continue;
        RationalVector e(s.ambient_dim());
        e[j] = Rational(1);
        gens.push_back(std::move(e));
    }
    return Subspace::span(s.ambient_dim(), gens);
}

}  // namespace rlk
