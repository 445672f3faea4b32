#include "lkrep/matrix.hpp"

namespace lkrep {

namespace {

// Picks the nonzero candidate with the fewest terms to limit swell.
int pick_pivot_row(const RingMatrix& m, int col, int from_row) {
    int best = -1;
    std::size_t best_terms = 0;
    for (int r = from_row; r < m.rows(); ++r) {
        const Laurent& x = m.at(r, col);
        if (x.is_zero()) continue;
        if (best < 0 || x.term_count() < best_terms) {
            best = r;
            best_terms = x.term_count();
        }
    }
    return best;
}

void swap_rows(RingMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

struct BareissResult {
    RingMatrix mat;   // upper triangular left block (possibly augmented)
    Laurent det;      // determinant of the leading square block
    bool singular = false;
};

// Fraction-free forward elimination of the n x n leading block of `work`
// (columns past n are carried along, for augmented solves). All divisions
// are by the previous pivot and are exact in the Laurent domain.
BareissResult bareiss_forward(RingMatrix work, int n) {
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        const int p = pick_pivot_row(work, k, k);
        if (p < 0) return {std::move(work), Laurent(), true};
        if (p != k) {
            swap_rows(work, p, k);
            sign = -sign;
        }
        const Laurent pivot = work.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < work.cols(); ++c) {
                Laurent num = work.at(r, c) * pivot - work.at(r, k) * work.at(k, c);
                auto q = Laurent::divide_exact(num, prev);
                if (!q) throw error("bareiss: non-exact division (corrupt input?)");
                work.at(r, c) = std::move(*q);
            }
            work.at(r, k) = Laurent();
        }
        prev = pivot;
    }
    Laurent det = work.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return {std::move(work), std::move(det), false};
}

}  // namespace

Laurent ring_det(const RingMatrix& m) {
    if (!m.is_square()) throw dimension_error("ring_det: matrix not square");
    if (m.rows() == 0) return Laurent(1);
    auto res = bareiss_forward(m, m.rows());
    return res.singular ? Laurent() : res.det;
}

std::optional<RingMatrix> ring_inverse(const RingMatrix& m) {
    if (!m.is_square()) throw dimension_error("ring_inverse: matrix not square");
    const int n = m.rows();
    RingMatrix work(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) work.at(r, c) = m.at(r, c);
        work.at(r, n + r) = Laurent(1);
    }
    auto res = bareiss_forward(std::move(work), n);
    if (res.singular || !res.det.is_unit()) return std::nullopt;

    // Back substitution of U * X = B. The solution is the Laurent-entry
    // inverse (the determinant is a unit), so every division is exact.
    const RingMatrix& u = res.mat;
    RingMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        for (int r = n - 1; r >= 0; --r) {
            Laurent acc = u.at(r, n + c);
            for (int j = r + 1; j < n; ++j) acc -= u.at(r, j) * inv.at(j, c);
            auto q = Laurent::divide_exact(acc, u.at(r, r));
            if (!q) return std::nullopt;
            inv.at(r, c) = std::move(*q);
        }
    }
    if (m * inv != RingMatrix::identity(n)) throw error("ring_inverse: verification failed");
    return inv;
}

QMatrix eval_matrix(const RingMatrix& m, const Rational& s0, const Rational& t0) {
    QMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).eval(s0, t0);
    return out;
}

}  // namespace lkrep
