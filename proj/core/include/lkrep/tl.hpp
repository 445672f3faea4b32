#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lkrep/braid.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/linalg.hpp"

namespace lkrep {

/*
 * A Temperley-Lieb diagram on n strands: a planar perfect matching of the
 * 2n boundary points of a rectangle, bottom points 1..n and top points
 * 1'..n'. Internally point p < n is bottom p+1 and point n+j-1 is top j'.
 * Planarity means non-crossing in the cyclic boundary order (bottom 1..n,
 * then top n'..1').
 */
class TLDiagram {
public:
    // match[p] = partner of point p; validated as a planar perfect matching.
    TLDiagram(int n, std::vector<int> match);

    static TLDiagram identity(int n);
    // Cup-cap generator diagram: bottom i~i+1, top i'~(i+1)', rest vertical.
    static TLDiagram cup_cap(int n, int i);

    int n() const { return n_; }
    int partner(int p) const { return match_[p]; }
    const std::vector<int>& match() const { return match_; }

    bool operator==(const TLDiagram&) const = default;
    // Lexicographic on the match table; gives diagrams a canonical order.
    auto operator<=>(const TLDiagram& o) const { return match_ <=> o.match_; }

    // Canonical pair-list form, e.g. "[(1,2),(3,3'),(1',2')]".
    std::string str() const;

private:
    int n_;
    std::vector<int> match_;
};

// Stacks a on top of b (a's bottom glued to b's top). Returns the resulting
// diagram and the number of closed loops removed.
std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b);

// Every diagram on n strands, in canonical order, with its index. Cached
// per n (write-once). The count is the n-th Catalan number.
struct DiagramTable {
    std::vector<TLDiagram> diagrams;
    std::map<TLDiagram, int> index;
};
const DiagramTable& diagram_table(int n);

// Loop value delta = -q^(1/2) - q^(-1/2).
Laurent tl_delta();

/*
 * An element of the diagram algebra TL_n: a finite Laurent-linear
 * combination of diagrams, kept canonical (no zero coefficients).
 * Multiplication stacks diagrams and converts each removed loop into a
 * factor of delta.
 */
class TLElement {
public:
    explicit TLElement(int n) : n_(n) {}
    TLElement(const TLDiagram& d, Laurent coeff = Laurent(1));

    static TLElement one(int n) { return TLElement(TLDiagram::identity(n)); }
    // The generator e_i.
    static TLElement e(int n, int i) { return TLElement(TLDiagram::cup_cap(n, i)); }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TLDiagram, Laurent>& terms() const { return terms_; }

    TLElement operator-() const;
    TLElement& operator+=(const TLElement& rhs);
    TLElement& operator-=(const TLElement& rhs);
    friend TLElement operator+(TLElement lhs, const TLElement& rhs) { return lhs += rhs; }
    friend TLElement operator-(TLElement lhs, const TLElement& rhs) { return lhs -= rhs; }
    friend TLElement operator*(const Laurent& scalar, const TLElement& x);
    friend TLElement operator*(const TLElement& a, const TLElement& b);

    bool operator==(const TLElement&) const = default;

    // Coefficient vector over the canonical diagram basis at s = s0.
    std::vector<Rational> eval_vector(const Rational& s0) const;

    std::string str() const;

private:
    void insert(const TLDiagram& d, const Laurent& c);

    int n_;
    std::map<TLDiagram, Laurent> terms_;
};

// The braid-group homomorphism sigma_i -> 1 + q^(1/2) e_i (and
// sigma_i^{-1} -> 1 + q^(-1/2) e_i), extended over the word.
TLElement braid_to_tl(const BraidWord& w);

// Image of the Hecke-kernel generator z = s s' s - s s' - s' s + s + s' - 1
// for sigma_i, sigma_j; the zero element whenever |i-j| = 1.
TLElement z_image(int n, int i, int j);

// Rejects s0 in {0, 1, -1}: q = s0^2 must satisfy q^2 != 1 and q^3 != 1.
void require_admissible_sample(const Rational& s0);

// Span of {d * gen : d a diagram} in diagram coordinates at s = s0.
Subspace left_ideal_basis(const TLElement& gen, const Rational& s0);

/*
 * The (n-2,2) representation S = M / (M cap N), where M is the left ideal
 * generated by e_1 e_3 and N the one generated by {e_5, ..., e_{n-1}}
 * (empty, hence zero, for n <= 5). Computed at an admissible sample s0 in
 * the basis of the images of s_{i,j} = (e_i...e_2)(e_{j-1}...e_4)(e_1 e_3),
 * j > max(i+1, 3).
 */
struct SModule {
    int n = 0;
    Rational s0;
    int dim = 0;                                   // = n(n-3)/2
    int dim_ideal = 0;                             // dim M
    int dim_intersection = 0;                      // dim (M cap N)
    std::vector<std::pair<int, int>> basis_pairs;  // the (i,j) of s_{i,j}
    std::vector<QMatrix> e_action;                 // e_1..e_{n-1} on S
};

// The s_{i,j} product itself (a single diagram with coefficient 1).
TLElement s_basis_element(int n, int i, int j);

// Throws degenerate_sample_error if the s_{i,j} images fail to be a basis
// of dimension n(n-3)/2 at this sample.
SModule s_module(int n, const Rational& s0);

// rho_S(sigma_k) = I + s0 * (matrix of e_k on S) for k = 1..n-1.
std::vector<QMatrix> s_braid_matrices(int n, const Rational& s0);
std::vector<QMatrix> s_braid_matrices(const SModule& sm);

}  // namespace lkrep
