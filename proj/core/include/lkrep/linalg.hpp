#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lkrep/matrix.hpp"

namespace lkrep {

// Reduced row echelon form together with its rank profile.
struct Rref {
    QMatrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Exact RREF. The elimination core is fraction-free (rows are cleared to
// integers and reduced Bareiss-style) to keep intermediate swell down.
Rref rref(const QMatrix& m);

int q_rank(const QMatrix& m);

// Inverse of a square rational matrix, nullopt if singular.
std::optional<QMatrix> q_inverse(const QMatrix& m);

/*
 * A linear subspace of Q^ambient in canonical form: the rows of `row_basis`
 * are an RREF basis, so equal subspaces compare equal structurally.
 */
class Subspace {
public:
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    // Span of the columns (resp. rows) of m; ambient = m.rows() (resp. cols).
    static Subspace span_columns(const QMatrix& m);
    static Subspace span_rows(const QMatrix& m);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }

    const QMatrix& row_basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    // Basis as column vectors (the ambient-by-1 shape callers usually want).
    std::vector<QMatrix> basis_columns() const;

    bool contains(const QMatrix& column_vector) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;

    // v minus its projection onto the pivot coordinates; the result has
    // zeros at every pivot column of this subspace.
    QMatrix reduce(const QMatrix& column_vector) const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(int ambient, QMatrix basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int ambient_ = 0;
    QMatrix basis_;              // dim x ambient, RREF
    std::vector<int> pivots_;    // pivot column of each basis row
};

Subspace q_kernel(const QMatrix& m);
Subspace q_column_space(const QMatrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);

// Smallest subspace containing `seed` and mapped into itself by every op.
// Computed by saturation: adjoin images until the dimension stabilizes.
Subspace invariant_closure(const Subspace& seed, std::span<const QMatrix> ops);

// The matrix induced by `op` on Q^ambient / w, written in the coordinates
// of the non-pivot columns of w's RREF basis. Throws not_invariant_error
// if op does not map w into itself.
QMatrix quotient_action(const QMatrix& op, const Subspace& w);

// Solves basis_cols * X = targets exactly; nullopt if any column of
// `targets` is outside the span of `basis_cols`.
std::optional<QMatrix> solve_in_basis(const QMatrix& basis_cols, const QMatrix& targets);

// Searches for an invertible T with T * a[k] = b[k] * T for all k, by
// solving the combined homogeneous system and scanning the solution space
// (basis elements, their sum, then seeded random combinations).
std::optional<QMatrix> solve_intertwiner(std::span<const QMatrix> a,
                                         std::span<const QMatrix> b);

// Characteristic polynomial coefficients, leading term first:
// x^d + c[1] x^{d-1} + ... + c[d]  (Faddeev-LeVerrier, exact).
std::vector<Rational> char_poly(const QMatrix& m);

}  // namespace lkrep
