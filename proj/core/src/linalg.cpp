#include "lkrep/linalg.hpp"

#include <algorithm>
#include <random>

namespace lkrep {

namespace {

// Integer matrix used inside the elimination core.
using ZRows = std::vector<std::vector<mpz_class>>;

// Clears each row of m to integers (multiply by the lcm of denominators).
// Row scaling preserves the row space, hence the RREF.
ZRows clear_denominators(const QMatrix& m) {
    ZRows z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l(1);
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            mpz_class scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(),
                         m.at(r, c).get_den().get_mpz_t());
            z[r][c] = m.at(r, c).get_num() * scale;
        }
    }
    return z;
}

// Shortest-digit nonzero pivot, to keep Bareiss intermediates small.
int pick_pivot(const ZRows& z, int col, int from_row) {
    int best = -1;
    std::size_t best_size = 0;
    for (int r = from_row; r < static_cast<int>(z.size()); ++r) {
        if (z[r][col] == 0) continue;
        const std::size_t size = mpz_size(z[r][col].get_mpz_t());
        if (best < 0 || size < best_size) {
            best = r;
            best_size = size;
        }
    }
    return best;
}

}  // namespace

Rref rref(const QMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    ZRows z = clear_denominators(m);

    // Fraction-free forward elimination (Bareiss): after each step the
    // entries are minors of the scaled input, and the division by the
    // previous pivot is exact.
    std::vector<int> pivot_cols;
    mpz_class prev(1);
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        const int p = pick_pivot(z, col, lead);
        if (p < 0) continue;
        std::swap(z[p], z[lead]);
        const mpz_class pivot = z[lead][col];
        for (int r = lead + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class num = z[r][c] * pivot - z[r][col] * z[lead][c];
                mpz_divexact(z[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            z[r][col] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++lead;
    }
    const int rank = static_cast<int>(pivot_cols.size());

    // Normalize to RREF over Q: unit pivots, zeros above each pivot.
    QMatrix out(rank, cols);
    for (int r = 0; r < rank; ++r) {
        const mpz_class& pivot = z[r][pivot_cols[r]];
        for (int c = pivot_cols[r]; c < cols; ++c) {
            if (z[r][c] == 0) continue;
            Rational v(z[r][c], pivot);
            v.canonicalize();
            out.at(r, c) = v;
        }
    }
    for (int r = rank - 1; r >= 0; --r) {
        for (int above = 0; above < r; ++above) {
            const Rational factor = out.at(above, pivot_cols[r]);
            if (factor == 0) continue;
            for (int c = pivot_cols[r]; c < cols; ++c) {
                if (out.at(r, c) == 0) continue;
                out.at(above, c) -= factor * out.at(r, c);
            }
        }
    }
    return {std::move(out), std::move(pivot_cols), rank};
}

int q_rank(const QMatrix& m) { return rref(m).rank; }

std::optional<QMatrix> q_inverse(const QMatrix& m) {
    if (!m.is_square()) throw dimension_error("q_inverse: matrix not square");
    const int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    Rref red = rref(aug);
    if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = red.mat.at(r, n + c);
    return inv;
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, QMatrix(0, ambient), {}); }

Subspace Subspace::full(int ambient) {
    std::vector<int> pivots(ambient);
    for (int i = 0; i < ambient; ++i) pivots[i] = i;
    return Subspace(ambient, QMatrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span_rows(const QMatrix& m) {
    Rref red = rref(m);
    return Subspace(m.cols(), std::move(red.mat), std::move(red.pivot_cols));
}

Subspace Subspace::span_columns(const QMatrix& m) { return span_rows(m.transpose()); }

std::vector<QMatrix> Subspace::basis_columns() const {
    std::vector<QMatrix> out;
    out.reserve(dim());
    for (int r = 0; r < dim(); ++r) {
        QMatrix v(ambient_, 1);
        for (int c = 0; c < ambient_; ++c) v.at(c, 0) = basis_.at(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

QMatrix Subspace::reduce(const QMatrix& v) const {
    if (v.rows() != ambient_ || v.cols() != 1)
        throw dimension_error("Subspace::reduce: expected an ambient column vector");
    QMatrix out = v;
    for (int r = 0; r < dim(); ++r) {
        const Rational factor = out.at(pivots_[r], 0);
        if (factor == 0) continue;
        for (int c = 0; c < ambient_; ++c) {
            if (basis_.at(r, c) == 0) continue;
            out.at(c, 0) -= factor * basis_.at(r, c);
        }
    }
    return out;
}

bool Subspace::contains(const QMatrix& v) const {
    QMatrix rest = reduce(v);
    for (int c = 0; c < ambient_; ++c)
        if (rest.at(c, 0) != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw dimension_error("subspace ambient mismatch");
    for (const auto& v : other.basis_columns())
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw dimension_error("subspace ambient mismatch");
    QMatrix stacked(dim() + other.dim(), ambient_);
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(r, c) = basis_.at(r, c);
    for (int r = 0; r < other.dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(dim() + r, c) = other.basis_.at(r, c);
    return span_rows(stacked);
}

Subspace q_kernel(const QMatrix& m) {
    Rref red = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : red.pivot_cols) is_pivot[p] = true;

    QMatrix basis(cols - red.rank, cols);
    int row = 0;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis.at(row, free) = 1;
        for (int r = 0; r < red.rank; ++r)
            basis.at(row, red.pivot_cols[r]) = -red.mat.at(r, free);
        ++row;
    }
    return Subspace::span_rows(basis);
}

Subspace q_column_space(const QMatrix& m) { return Subspace::span_columns(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw dimension_error("subspace ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    // Solve [A^T | -B^T] x = 0; the A-part coordinates of each kernel vector
    // give an element of the intersection.
    const QMatrix at = a.row_basis().transpose();
    const QMatrix bt = b.row_basis().transpose();
    QMatrix joint(a.ambient(), a.dim() + b.dim());
    for (int r = 0; r < a.ambient(); ++r) {
        for (int c = 0; c < a.dim(); ++c) joint.at(r, c) = at.at(r, c);
        for (int c = 0; c < b.dim(); ++c) joint.at(r, a.dim() + c) = -bt.at(r, c);
    }
    Subspace ker = q_kernel(joint);
    QMatrix vectors(ker.dim(), a.ambient());
    for (int k = 0; k < ker.dim(); ++k) {
        for (int c = 0; c < a.ambient(); ++c) {
            Rational acc(0);
            for (int i = 0; i < a.dim(); ++i)
                acc += ker.row_basis().at(k, i) * a.row_basis().at(i, c);
            vectors.at(k, c) = acc;
        }
    }
    return Subspace::span_rows(vectors);
}

Subspace invariant_closure(const Subspace& seed, std::span<const QMatrix> ops) {
    for (const auto& op : ops)
        if (!op.is_square() || op.rows() != seed.ambient())
            throw dimension_error("invariant_closure: op shape disagrees with ambient");
    Subspace w = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& op : ops) {
            QMatrix images(w.dim(), w.ambient());
            for (int r = 0; r < w.dim(); ++r) {
                for (int c = 0; c < w.ambient(); ++c) {
                    Rational acc(0);
                    for (int k = 0; k < w.ambient(); ++k) {
                        if (op.at(c, k) == 0 || w.row_basis().at(r, k) == 0) continue;
                        acc += op.at(c, k) * w.row_basis().at(r, k);
                    }
                    images.at(r, c) = acc;
                }
            }
            Subspace next = w.sum(Subspace::span_rows(images));
            if (next.dim() > w.dim()) {
                w = std::move(next);
                grew = true;
            }
        }
    }
    return w;
}

QMatrix quotient_action(const QMatrix& op, const Subspace& w) {
    if (!op.is_square() || op.rows() != w.ambient())
        throw dimension_error("quotient_action: op shape disagrees with ambient");
    for (const auto& v : w.basis_columns())
        if (!w.contains(op * v))
            throw not_invariant_error("quotient_action: subspace is not op-invariant");

    std::vector<bool> is_pivot(w.ambient(), false);
    for (int p : w.pivot_cols()) is_pivot[p] = true;
    std::vector<int> complement;
    for (int c = 0; c < w.ambient(); ++c)
        if (!is_pivot[c]) complement.push_back(c);

    const int qdim = static_cast<int>(complement.size());
    QMatrix out(qdim, qdim);
    for (int j = 0; j < qdim; ++j) {
        QMatrix e(w.ambient(), 1);
        e.at(complement[j], 0) = 1;
        QMatrix image = w.reduce(op * e);
        for (int i = 0; i < qdim; ++i) out.at(i, j) = image.at(complement[i], 0);
    }
    return out;
}

std::optional<QMatrix> solve_in_basis(const QMatrix& basis_cols, const QMatrix& targets) {
    if (basis_cols.rows() != targets.rows())
        throw dimension_error("solve_in_basis: ambient dimensions disagree");
    const int n = basis_cols.rows();
    const int k = basis_cols.cols();
    QMatrix aug(n, k + targets.cols());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < k; ++c) aug.at(r, c) = basis_cols.at(r, c);
        for (int c = 0; c < targets.cols(); ++c) aug.at(r, k + c) = targets.at(r, c);
    }
    Rref red = rref(aug);
    // Unique solution requires full column rank on the basis block.
    int basis_rank = 0;
    for (int p : red.pivot_cols)
        if (p < k) ++basis_rank;
    if (basis_rank != k) throw dimension_error("solve_in_basis: basis columns are dependent");
    if (red.rank > k) return std::nullopt;  // some target leaves the span
    QMatrix x(k, targets.cols());
    for (int r = 0; r < red.rank; ++r)
        for (int c = 0; c < targets.cols(); ++c)
            x.at(red.pivot_cols[r], c) = red.mat.at(r, k + c);
    return x;
}

std::optional<QMatrix> solve_intertwiner(std::span<const QMatrix> a,
                                         std::span<const QMatrix> b) {
    if (a.size() != b.size())
        throw dimension_error("solve_intertwiner: generator lists differ in length");
    if (a.empty()) throw dimension_error("solve_intertwiner: empty generator list");
    const int d = a[0].rows();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_square() || !b[k].is_square() || a[k].rows() != d || b[k].rows() != d)
            throw dimension_error("solve_intertwiner: generators must share one square size");
    }

    // Unknown T flattened row-major; equations T a_k - b_k T = 0.
    QMatrix sys(static_cast<int>(a.size()) * d * d, d * d);
    int row = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                for (int m = 0; m < d; ++m) {
                    sys.at(row, r * d + m) += a[k].at(m, c);
                    sys.at(row, m * d + c) -= b[k].at(r, m);
                }
                ++row;
            }
        }
    }
    Subspace solutions = q_kernel(sys);
    if (solutions.dim() == 0) return std::nullopt;

    auto unflatten = [d](const std::vector<Rational>& flat) {
        QMatrix t(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) t.at(r, c) = flat[r * d + c];
        return t;
    };

    std::vector<QMatrix> candidates;
    for (int i = 0; i < solutions.dim(); ++i) {
        std::vector<Rational> flat(d * d);
        for (int c = 0; c < d * d; ++c) flat[c] = solutions.row_basis().at(i, c);
        candidates.push_back(unflatten(flat));
    }
    {
        std::vector<Rational> flat(d * d, Rational(0));
        for (int i = 0; i < solutions.dim(); ++i)
            for (int c = 0; c < d * d; ++c) flat[c] += solutions.row_basis().at(i, c);
        candidates.push_back(unflatten(flat));
    }
    // Deterministic seed sequence; invertible elements are generic in the
    // solution space when one exists at all.
    std::mt19937_64 rng(0x1c3a5u);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Rational> flat(d * d, Rational(0));
        for (int i = 0; i < solutions.dim(); ++i) {
            const long coeff = static_cast<long>(rng() % 19) - 9;
            if (coeff == 0) continue;
            for (int c = 0; c < d * d; ++c)
                flat[c] += Rational(coeff) * solutions.row_basis().at(i, c);
        }
        candidates.push_back(unflatten(flat));
    }
    for (const auto& t : candidates) {
        if (q_rank(t) == d) return t;
    }
    return std::nullopt;
}

std::vector<Rational> char_poly(const QMatrix& m) {
    if (!m.is_square()) throw dimension_error("char_poly: matrix not square");
    const int d = m.rows();
    std::vector<Rational> coeffs(d + 1);
    coeffs[0] = 1;
    QMatrix mk = QMatrix::identity(d);  // M_0 = I, c_0 = 1
    for (int k = 1; k <= d; ++k) {
        mk = m * mk;
        Rational trace(0);
        for (int i = 0; i < d; ++i) trace += mk.at(i, i);
        coeffs[k] = -trace / Rational(k);
        coeffs[k].canonicalize();
        for (int i = 0; i < d; ++i) mk.at(i, i) += coeffs[k];
    }
    return coeffs;
}

}  // namespace lkrep
