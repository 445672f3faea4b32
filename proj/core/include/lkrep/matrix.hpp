#pragma once

#include <optional>
#include <vector>

#include "lkrep/errors.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/rational.hpp"

namespace lkrep {

// Dense row-major matrix over an exact ring (Laurent or Rational here).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same_shape(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        require_same_shape(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.cols_ != rhs.rows_)
            throw dimension_error("matrix product: inner dimensions disagree");
        Matrix out(lhs.rows_, rhs.cols_);
        for (int r = 0; r < lhs.rows_; ++r) {
            for (int k = 0; k < lhs.cols_; ++k) {
                const T& f = lhs.at(r, k);
                if (f == T(0)) continue;
                for (int c = 0; c < rhs.cols_; ++c) {
                    const T& g = rhs.at(k, c);
                    if (g == T(0)) continue;
                    out.at(r, c) += f * g;
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const T& scalar, Matrix m) {
        for (auto& x : m.a_) x = scalar * x;
        return m;
    }

    Matrix map(auto&& f) const {
        Matrix out(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.at(r, c) = f(at(r, c));
        return out;
    }

private:
    void require_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw dimension_error("matrix sum: shapes disagree");
    }

    int rows_;
    int cols_;
    std::vector<T> a_;
};

using RingMatrix = Matrix<Laurent>;
using QMatrix = Matrix<Rational>;

// Determinant by fraction-free (Bareiss) elimination; exact in any domain.
Laurent ring_det(const RingMatrix& m);

// Inverse over the Laurent ring. Exists iff the determinant is a unit;
// returns nullopt otherwise. The result is verified against the identity.
std::optional<RingMatrix> ring_inverse(const RingMatrix& m);

// Entry-wise evaluation at s = s0, t = t0.
QMatrix eval_matrix(const RingMatrix& m, const Rational& s0, const Rational& t0);

}  // namespace lkrep
