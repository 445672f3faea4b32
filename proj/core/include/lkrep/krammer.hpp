#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lkrep/braid.hpp"
#include "lkrep/matrix.hpp"

namespace lkrep {

// The ordered index set {(i,j) : 1 <= i < j <= n}, lexicographic. It names
// the rows and columns of the Krammer matrices; size n(n-1)/2.
class PairBasis {
public:
    explicit PairBasis(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    std::pair<int, int> pair(int index) const { return pairs_[index]; }
    int index(int i, int j) const;
    std::string label(int index) const;  // "F(i,j)"

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

/*
 * Generator matrix of the Krammer representation of B_n on the free module
 * with basis {F(i,j)}: column (j,k) holds the coordinates of the image of
 * F(j,k) under sigma_i (sign = +1) or sigma_i^{-1} (sign = -1).
 *
 * Sign convention: sigma_i(F(i,i+1)) = -tq^2 F(i,i+1). Matrix tables for
 * this representation circulate with t of either sign; swap t -> -t to
 * translate.
 *
 * The inverse matrices are obtained by exact linear solving over the
 * Laurent ring and verified against the identity; both signs are cached
 * per (n, i) behind a lock (concurrent readers, single initializer).
 */
RingMatrix krammer_generator(int n, int i, int sign);

// Product of generator matrices in word order; the empty word gives the
// identity, and concatenation maps to matrix product.
RingMatrix rep_matrix(const BraidWord& w);

// Exact decision procedures. The representation is faithful, so matrix
// equality decides braid equality.
bool is_trivial(const BraidWord& w);
bool words_equal(const BraidWord& a, const BraidWord& b);

// Fixed sample point used for fingerprints: s = 2/3 (q = 4/9), t = -9/4.
Rational fingerprint_s0();
Rational fingerprint_t0();

// Characteristic polynomial of rep_matrix(w) evaluated at the fingerprint
// sample, leading coefficient first. Invariant under conjugation of w.
std::vector<Rational> rep_fingerprint(const BraidWord& w);

}  // namespace lkrep
