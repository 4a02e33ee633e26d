#pragma once

#include <vector>

#include "rlk/matrix.hpp"

namespace rlk {

/// Linear subspace of Q^n in canonical form: the basis rows are the
/// nonzero rows of a reduced row-echelon form, pivot columns strictly
/// increasing. Two Subspace values coincide as point sets iff their
/// stored bases are identical entrywise, so operator== decides equality.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    /// Canonicalizes an arbitrary spanning set.
    static Subspace span(int ambient_dim, const std::vector<RationalVector>& vectors);
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<RationalVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;

    /// Basis rows as a dim x ambient matrix.
    Matrix basis_matrix() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    int ambient_;
    std::vector<RationalVector> basis_;
    std::vector<int> pivots_;
};

/// Column space of m, inside Q^rows.
Subspace image(const Matrix& m);

/// Null space of m, inside Q^cols.
Subspace kernel(const Matrix& m);

bool subspace_equal(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);

bool membership(const RationalVector& v, const Subspace& s);

/// Constraint matrix: rows form a basis of the functionals vanishing on s,
/// so s = kernel(constraints(s)).
Matrix constraints(const Subspace& s);

/// The coordinate complement spanned by the standard basis vectors at the
/// non-pivot columns of s's canonical basis. Always a direct-sum
/// complement of s in its ambient space.
Subspace coordinate_complement(const Subspace& s);

}  // namespace rlk
