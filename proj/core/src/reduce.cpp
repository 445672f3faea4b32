#include "lkrep/reduce.hpp"

#include <algorithm>

namespace lkrep {

IotaModel::IotaModel(int n) : n_(n), basis_(n) {
    if (n < 2) throw dimension_error("IotaModel needs n >= 2");
    const Laurent one(1);
    const Laurent q = Laurent::q();
    const Laurent t = Laurent::t();
    const Laurent square = (one - q) * (one - q);
    const Laurent collar = one + q * t;
    const Laurent twist = one - t;
    multipliers_.reserve(basis_.size());
    for (int idx = 0; idx < basis_.size(); ++idx) {
        auto [i, j] = basis_.pair(idx);
        if (j == i + 1)
            multipliers_.push_back(square * collar * twist);
        else if (i == 1 && j == 3)
            multipliers_.push_back(square * collar);
        else
            multipliers_.push_back(square);
    }
}

const Laurent& IotaModel::multiplier(int i, int j) const {
    return multipliers_[basis_.index(i, j)];
}

IotaModel iota_multipliers(int n) { return IotaModel(n); }

std::vector<std::pair<int, int>> iota_kernel_at_specialization(int n) {
    if (n < 4) throw dimension_error("iota_kernel_at_specialization needs n >= 4");
    const IotaModel model(n);
    std::vector<std::pair<int, int>> out;
    for (int idx = 0; idx < model.basis().size(); ++idx) {
        auto [i, j] = model.basis().pair(idx);
        if (model.multiplier(i, j).specialize_t().is_zero()) out.emplace_back(i, j);
    }
    return out;
}

std::vector<std::pair<int, int>> iota_survivors_at_specialization(int n) {
    if (n < 4) throw dimension_error("iota_survivors_at_specialization needs n >= 4");
    const IotaModel model(n);
    std::vector<std::pair<int, int>> out;
    for (int idx = 0; idx < model.basis().size(); ++idx) {
        auto [i, j] = model.basis().pair(idx);
        if (!model.multiplier(i, j).specialize_t().is_zero()) out.emplace_back(i, j);
    }
    return out;
}

std::vector<QMatrix> lk_specialized_generators(int n, const Rational& s0) {
    require_admissible_sample(s0);
    const Rational q0 = s0 * s0;
    Rational t0 = Rational(-1) / q0;
    t0.canonicalize();
    std::vector<QMatrix> out;
    out.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        out.push_back(eval_matrix(krammer_generator(n, i, 1), s0, t0));
    return out;
}

namespace {

bool is_zero_matrix(const QMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) return false;
    return true;
}

// z = g_i g_j g_i - g_i g_j - g_j g_i + g_i + g_j - 1 in matrix form.
QMatrix z_matrix(const QMatrix& gi, const QMatrix& gj) {
    const QMatrix id = QMatrix::identity(gi.rows());
    return gi * gj * gi - gi * gj - gj * gi + gi + gj - id;
}

}  // namespace

QuotientReport lk_quotient(int n, const Rational& s0) {
    if (n < 4) throw dimension_error("lk_quotient needs n >= 4");
    const std::vector<QMatrix> direct = lk_specialized_generators(n, s0);
    const int d = direct[0].rows();
    const Rational q0 = s0 * s0;

    // The generator table acts on basis elements; on coordinate functionals
    // it acts by the transposed matrices. The z-images of the dual action
    // span a proper invariant subspace whose quotient carries the
    // Temperley-Lieb structure; on the original coordinates the same
    // representation shows up as a subrepresentation instead. (Transposing
    // preserves every defining relation, which reads the same backwards.)
    std::vector<QMatrix> gens;
    gens.reserve(direct.size());
    for (const auto& g : direct) gens.push_back(g.transpose());

    QuotientReport report;
    report.n = n;
    report.s0 = s0;
    report.dim_ambient = d;

    std::vector<QMatrix> z_images;
    Subspace seed = Subspace::zero(d);
    for (int i = 1; i <= n - 2; ++i) {
        // |i-j| = 1: both orders, matching the two-sided kernel generators.
        z_images.push_back(z_matrix(gens[i - 1], gens[i]));
        z_images.push_back(z_matrix(gens[i], gens[i - 1]));
    }
    for (const auto& z : z_images) seed = seed.sum(q_column_space(z));

    const Subspace w = invariant_closure(seed, gens);
    report.dim_invariant = w.dim();
    report.dim_quotient = d - w.dim();
    const int expected = n * (n - 3) / 2;
    if (report.dim_quotient != expected) {
        throw degenerate_sample_error(
            "lk_quotient: sample s0 = " + to_string(s0) + " gives quotient dimension " +
            std::to_string(report.dim_quotient) + " (expected " + std::to_string(expected) +
            ") for n = " + std::to_string(n) + "; retry with another sample");
    }

    report.quotient_generators.reserve(gens.size());
    for (const auto& g : gens) report.quotient_generators.push_back(quotient_action(g, w));

    const QMatrix id = QMatrix::identity(expected);
    report.hecke_ok = true;
    for (const auto& g : report.quotient_generators) {
        const QMatrix hecke = (g - id) * (g + q0 * id);
        if (!is_zero_matrix(hecke)) report.hecke_ok = false;
    }
    report.z_ok = true;
    for (std::size_t i = 0; i + 1 < report.quotient_generators.size(); ++i) {
        const auto& a = report.quotient_generators[i];
        const auto& b = report.quotient_generators[i + 1];
        if (!is_zero_matrix(z_matrix(a, b)) || !is_zero_matrix(z_matrix(b, a)))
            report.z_ok = false;
    }
    report.braid_relations_ok = true;
    for (std::size_t i = 0; i + 1 < report.quotient_generators.size(); ++i) {
        const auto& a = report.quotient_generators[i];
        const auto& b = report.quotient_generators[i + 1];
        if (a * b * a != b * a * b) report.braid_relations_ok = false;
    }
    for (std::size_t i = 0; i < report.quotient_generators.size(); ++i) {
        for (std::size_t j = i + 2; j < report.quotient_generators.size(); ++j) {
            const auto& a = report.quotient_generators[i];
            const auto& b = report.quotient_generators[j];
            if (a * b != b * a) report.braid_relations_ok = false;
        }
    }
    return report;
}

QuotientReport verify_theorem_tl(int n, const Rational& s0) {
    QuotientReport report = lk_quotient(n, s0);
    const std::vector<QMatrix> tl_gens = s_braid_matrices(n, s0);
    report.intertwiner = solve_intertwiner(report.quotient_generators, tl_gens);
    return report;
}

std::vector<Rational> default_samples() {
    return {Rational(2, 3), Rational(3, 5)};
}

}  // namespace lkrep
