#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lkrep/krammer.hpp"
#include "lkrep/tl.hpp"

namespace lkrep {

/*
 * Multiplier model of the map iota from homology to relative homology:
 * each basis pair (i,j) carries the product of surface factors
 *   (1-q)^2 (1+qt) (1-t)   if j = i+1,
 *   (1-q)^2 (1+qt)         if (i,j) = (1,3),
 *   (1-q)^2                otherwise.
 * At t = -q^{-1} exactly the first two classes vanish.
 */
class IotaModel {
public:
    explicit IotaModel(int n);

    int n() const { return n_; }
    const Laurent& multiplier(int i, int j) const;
    const PairBasis& basis() const { return basis_; }

private:
    int n_;
    PairBasis basis_;
    std::vector<Laurent> multipliers_;
};

IotaModel iota_multipliers(int n);

// Pairs whose multiplier vanishes under t -> -q^{-1}; computed by actually
// specializing the model. Equals {(i,i+1)} plus (1,3); size n for n >= 4.
std::vector<std::pair<int, int>> iota_kernel_at_specialization(int n);

// The complementary pairs, i.e. those with j > max(i+1,3); size n(n-3)/2.
std::vector<std::pair<int, int>> iota_survivors_at_specialization(int n);

// Krammer generator matrices evaluated at q = s0^2, t = -1/s0^2.
std::vector<QMatrix> lk_specialized_generators(int n, const Rational& s0);

// Outcome of the quotient construction at one sample.
struct QuotientReport {
    int n = 0;
    Rational s0;
    int dim_ambient = 0;         // n(n-1)/2
    int dim_invariant = 0;       // dim W
    int dim_quotient = 0;        // dim_ambient - dim W, expected n(n-3)/2
    std::vector<QMatrix> quotient_generators;
    bool hecke_ok = false;       // (sigma-1)(sigma+q) = 0 on the quotient
    bool z_ok = false;           // all z images vanish on the quotient
    bool braid_relations_ok = false;
    std::optional<QMatrix> intertwiner;  // T with T*quot_k = rho_S_k*T
};

/*
 * Specializes the Krammer representation at t = -q^{-1} (q = s0^2), seeds
 * an invariant subspace W with the column spaces of all z images, saturates
 * it under the generators, and forms the quotient action. Throws
 * degenerate_sample_error if the quotient dimension is not n(n-3)/2.
 */
QuotientReport lk_quotient(int n, const Rational& s0);

// lk_quotient plus an explicit intertwiner to the diagrammatic (n-2,2)
// representation at the same sample; intertwiner is empty when the search
// fails (expected only at non-generic samples).
QuotientReport verify_theorem_tl(int n, const Rational& s0);

// Default verification samples; a result counts as verified only when all
// samples agree.
std::vector<Rational> default_samples();

}  // namespace lkrep
