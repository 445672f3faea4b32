#include "lkrep/tl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace lkrep {

namespace {

// Position of point p in the cyclic boundary order (bottom 1..n, then top
// n'..1'); planarity is non-crossing with respect to this order.
int cyclic_position(int n, int p) { return p < n ? p : 3 * n - 1 - p; }

}  // namespace

TLDiagram::TLDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (n_ < 1) throw dimension_error("TLDiagram needs n >= 1");
    const int points = 2 * n_;
    if (static_cast<int>(match_.size()) != points)
        throw dimension_error("TLDiagram: match table has wrong size");
    for (int p = 0; p < points; ++p) {
        if (match_[p] < 0 || match_[p] >= points || match_[p] == p ||
            match_[match_[p]] != p)
            throw dimension_error("TLDiagram: not a perfect matching");
    }
    // Interleaving test on cyclic positions.
    for (int p = 0; p < points; ++p) {
        if (match_[p] < p) continue;
        int a1 = cyclic_position(n_, p), b1 = cyclic_position(n_, match_[p]);
        if (a1 > b1) std::swap(a1, b1);
        for (int r = p + 1; r < points; ++r) {
            if (match_[r] < r) continue;
            int a2 = cyclic_position(n_, r), b2 = cyclic_position(n_, match_[r]);
            if (a2 > b2) std::swap(a2, b2);
            const bool crossing = (a1 < a2 && a2 < b1 && b1 < b2) ||
                                  (a2 < a1 && a1 < b2 && b2 < b1);
            if (crossing) throw dimension_error("TLDiagram: matching is not planar");
        }
    }
}

TLDiagram TLDiagram::identity(int n) {
    std::vector<int> match(2 * n);
    for (int p = 0; p < n; ++p) {
        match[p] = p + n;
        match[p + n] = p;
    }
    return TLDiagram(n, std::move(match));
}

TLDiagram TLDiagram::cup_cap(int n, int i) {
    if (i < 1 || i > n - 1)
        throw dimension_error("cup_cap: index " + std::to_string(i) +
                              " out of range for n = " + std::to_string(n));
    std::vector<int> match(2 * n);
    for (int p = 0; p < n; ++p) {
        match[p] = p + n;
        match[p + n] = p;
    }
    match[i - 1] = i;
    match[i] = i - 1;
    match[n + i - 1] = n + i;
    match[n + i] = n + i - 1;
    return TLDiagram(n, std::move(match));
}

std::string TLDiagram::str() const {
    auto point_name = [this](int p) {
        return p < n_ ? std::to_string(p + 1) : std::to_string(p - n_ + 1) + "'";
    };
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int p = 0; p < 2 * n_; ++p) {
        if (match_[p] < p) continue;
        if (!first) os << ',';
        first = false;
        os << '(' << point_name(p) << ',' << point_name(match_[p]) << ')';
    }
    os << ']';
    return os.str();
}

std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b) {
    if (a.n() != b.n()) throw dimension_error("compose: strand counts disagree");
    const int n = a.n();
    std::vector<int> result(2 * n, -1);
    std::vector<bool> seen_interface(n, false);

    // Walks from a result boundary point to its partner. Interface node i
    // joins a's bottom point i to b's top point n + i.
    auto walk = [&](bool start_in_a, int p) {
        bool in_a = start_in_a;
        while (true) {
            const int q = in_a ? a.partner(p) : b.partner(p);
            if (in_a) {
                if (q >= n) return q;  // a's top: result top point
                seen_interface[q] = true;
                in_a = false;
                p = q + n;
            } else {
                if (q < n) return q;  // b's bottom: result bottom point
                seen_interface[q - n] = true;
                in_a = true;
                p = q - n;
            }
        }
    };

    for (int p = 0; p < 2 * n; ++p) {
        if (result[p] >= 0) continue;
        const bool in_a = p >= n;  // result top points live in a
        const int partner = walk(in_a, p);
        result[p] = partner;
        result[partner] = p;
    }

    int loops = 0;
    for (int i = 0; i < n; ++i) {
        if (seen_interface[i]) continue;
        ++loops;
        int cur = i;
        while (true) {
            seen_interface[cur] = true;
            const int j = a.partner(cur);  // stays among a's bottom points
            seen_interface[j] = true;
            const int next = b.partner(j + n) - n;
            if (next == i) break;
            cur = next;
        }
    }
    return {TLDiagram(n, std::move(result)), loops};
}

namespace {

// Non-crossing perfect matchings of the given positions (an increasing
// list); the first position pairs at odd distance, splitting the rest.
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(
    const std::vector<int>& positions) {
    if (positions.empty()) return {{}};
    std::vector<std::vector<std::pair<int, int>>> out;
    for (std::size_t k = 1; k < positions.size(); k += 2) {
        const std::vector<int> inside(positions.begin() + 1, positions.begin() + k);
        const std::vector<int> outside(positions.begin() + k + 1, positions.end());
        for (const auto& left : noncrossing_matchings(inside)) {
            for (const auto& right : noncrossing_matchings(outside)) {
                auto m = left;
                m.emplace_back(positions.front(), positions[k]);
                m.insert(m.end(), right.begin(), right.end());
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::map<int, DiagramTable> diagram_cache;
std::mutex diagram_cache_mutex;

}  // namespace

const DiagramTable& diagram_table(int n) {
    if (n < 1) throw dimension_error("diagram_table needs n >= 1");
    std::lock_guard<std::mutex> lock(diagram_cache_mutex);
    auto it = diagram_cache.find(n);
    if (it != diagram_cache.end()) return it->second;

    std::vector<int> all_positions(2 * n);
    for (int i = 0; i < 2 * n; ++i) all_positions[i] = i;
    // Position pos maps back to point pos (bottom) or 3n-1-pos (top).
    auto point_of_position = [n](int pos) { return pos < n ? pos : 3 * n - 1 - pos; };

    DiagramTable table;
    for (const auto& matching : noncrossing_matchings(all_positions)) {
        std::vector<int> match(2 * n);
        for (const auto& [x, y] : matching) {
            const int p = point_of_position(x);
            const int q = point_of_position(y);
            match[p] = q;
            match[q] = p;
        }
        table.diagrams.emplace_back(n, std::move(match));
    }
    std::sort(table.diagrams.begin(), table.diagrams.end());
    for (int i = 0; i < static_cast<int>(table.diagrams.size()); ++i)
        table.index.emplace(table.diagrams[i], i);
    return diagram_cache.emplace(n, std::move(table)).first->second;
}

Laurent tl_delta() {
    return Laurent::monomial(-1, 1, 0) + Laurent::monomial(-1, -1, 0);
}

TLElement::TLElement(const TLDiagram& d, Laurent coeff) : n_(d.n()) {
    insert(d, coeff);
}

void TLElement::insert(const TLDiagram& d, const Laurent& c) {
    if (d.n() != n_) throw dimension_error("TLElement: diagram strand count disagrees");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement TLElement::operator-() const {
    TLElement out(n_);
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
    return out;
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
    if (rhs.n_ != n_) throw dimension_error("TLElement sum: strand counts disagree");
    for (const auto& [d, c] : rhs.terms_) insert(d, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& rhs) {
    if (rhs.n_ != n_) throw dimension_error("TLElement sum: strand counts disagree");
    for (const auto& [d, c] : rhs.terms_) insert(d, -c);
    return *this;
}

TLElement operator*(const Laurent& scalar, const TLElement& x) {
    TLElement out(x.n_);
    for (const auto& [d, c] : x.terms_) out.insert(d, scalar * c);
    return out;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
    if (a.n_ != b.n_) throw dimension_error("TLElement product: strand counts disagree");
    const Laurent delta = tl_delta();
    TLElement out(a.n_);
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            auto [d, loops] = compose(da, db);
            out.insert(d, ca * cb * delta.pow(loops));
        }
    }
    return out;
}

std::vector<Rational> TLElement::eval_vector(const Rational& s0) const {
    const DiagramTable& table = diagram_table(n_);
    std::vector<Rational> out(table.diagrams.size(), Rational(0));
    for (const auto& [d, c] : terms_) {
        // TL coefficients live in Z[q^(1/2), q^(-1/2)]; t must not occur.
        for (const auto& [e, coeff] : c.terms()) {
            (void)coeff;
            if (e.t_exp != 0)
                throw dimension_error("TLElement::eval_vector: coefficient contains t");
        }
        out[table.index.at(d)] = c.eval(s0, Rational(1));
    }
    return out;
}

std::string TLElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ") * " << d.str();
    }
    return os.str();
}

TLElement braid_to_tl(const BraidWord& w) {
    const int n = w.strands();
    TLElement acc = TLElement::one(n);
    for (int k : w.letters()) {
        TLElement image =
            TLElement::one(n) + Laurent::sqrt_q(k > 0 ? 1 : -1) * TLElement::e(n, std::abs(k));
        acc = acc * image;
    }
    return acc;
}

TLElement z_image(int n, int i, int j) {
    const TLElement si = braid_to_tl(BraidWord(n, {i}));
    const TLElement sj = braid_to_tl(BraidWord(n, {j}));
    const TLElement one = TLElement::one(n);
    return si * sj * si - si * sj - sj * si + si + sj - one;
}

void require_admissible_sample(const Rational& s0) {
    if (s0 == 0) throw inadmissible_sample_error("sample s0 = 0 is not allowed");
    const Rational q0 = s0 * s0;
    if (q0 * q0 == 1 || q0 * q0 * q0 == 1)
        throw inadmissible_sample_error("sample s0 = " + to_string(s0) +
                                        " violates q^2 != 1, q^3 != 1 (q = " +
                                        to_string(q0) + ")");
}

Subspace left_ideal_basis(const TLElement& gen, const Rational& s0) {
    require_admissible_sample(s0);
    const DiagramTable& table = diagram_table(gen.n());
    const int ambient = static_cast<int>(table.diagrams.size());
    QMatrix rows(ambient, ambient);
    for (int r = 0; r < ambient; ++r) {
        const auto v = (TLElement(table.diagrams[r]) * gen).eval_vector(s0);
        for (int c = 0; c < ambient; ++c) rows.at(r, c) = v[c];
    }
    return Subspace::span_rows(rows);
}

TLElement s_basis_element(int n, int i, int j) {
    TLElement acc = TLElement::one(n);
    for (int k = i; k >= 2; --k) acc = acc * TLElement::e(n, k);
    for (int k = j - 1; k >= 4; --k) acc = acc * TLElement::e(n, k);
    acc = acc * TLElement::e(n, 1);
    acc = acc * TLElement::e(n, 3);
    return acc;
}

SModule s_module(int n, const Rational& s0) {
    if (n < 4) throw dimension_error("s_module needs n >= 4");
    require_admissible_sample(s0);
    const DiagramTable& table = diagram_table(n);
    const int ambient = static_cast<int>(table.diagrams.size());

    const TLElement gen = TLElement::e(n, 1) * TLElement::e(n, 3);
    const Subspace ideal = left_ideal_basis(gen, s0);

    Subspace cutoff = Subspace::zero(ambient);
    for (int g = 5; g <= n - 1; ++g)
        cutoff = cutoff.sum(left_ideal_basis(TLElement::e(n, g), s0));
    const Subspace meet = intersect(ideal, cutoff);

    SModule sm;
    sm.n = n;
    sm.s0 = s0;
    sm.dim_ideal = ideal.dim();
    sm.dim_intersection = meet.dim();

    std::vector<TLElement> s_elems;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j <= std::max(i + 1, 3)) continue;
            sm.basis_pairs.emplace_back(i, j);
            s_elems.push_back(s_basis_element(n, i, j));
        }
    }
    const int count = static_cast<int>(s_elems.size());
    const int expected = n * (n - 3) / 2;

    // Assemble [basis of M cap N | images of s_{i,j}] and require it to be
    // a basis of M: that makes the s images independent and spanning mod
    // the intersection.
    QMatrix combined(ambient, meet.dim() + count);
    {
        const QMatrix& meet_rows = meet.row_basis();
        for (int c = 0; c < meet.dim(); ++c)
            for (int r = 0; r < ambient; ++r) combined.at(r, c) = meet_rows.at(c, r);
        for (int c = 0; c < count; ++c) {
            const auto v = s_elems[c].eval_vector(s0);
            for (int r = 0; r < ambient; ++r) combined.at(r, meet.dim() + c) = v[r];
        }
    }
    const int combined_rank = q_rank(combined);
    sm.dim = ideal.dim() - meet.dim();
    if (sm.dim != expected || count != expected ||
        combined_rank != meet.dim() + count || combined_rank != ideal.dim()) {
        throw degenerate_sample_error(
            "s_module: sample s0 = " + to_string(s0) + " is degenerate for n = " +
            std::to_string(n) + " (dim " + std::to_string(sm.dim) + ", expected " +
            std::to_string(expected) + "); retry with another sample");
    }

    for (int k = 1; k <= n - 1; ++k) {
        QMatrix targets(ambient, count);
        for (int c = 0; c < count; ++c) {
            const auto v = (TLElement::e(n, k) * s_elems[c]).eval_vector(s0);
            for (int r = 0; r < ambient; ++r) targets.at(r, c) = v[r];
        }
        auto coords = solve_in_basis(combined, targets);
        if (!coords)
            throw degenerate_sample_error("s_module: e_k image left the ideal span");
        QMatrix action(count, count);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < count; ++c) action.at(r, c) = coords->at(meet.dim() + r, c);
        sm.e_action.push_back(std::move(action));
    }
    return sm;
}

std::vector<QMatrix> s_braid_matrices(const SModule& sm) {
    std::vector<QMatrix> out;
    out.reserve(sm.e_action.size());
    for (const auto& e_mat : sm.e_action) {
        QMatrix m = QMatrix::identity(sm.dim);
        for (int r = 0; r < sm.dim; ++r)
            for (int c = 0; c < sm.dim; ++c) m.at(r, c) += sm.s0 * e_mat.at(r, c);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<QMatrix> s_braid_matrices(int n, const Rational& s0) {
    return s_braid_matrices(s_module(n, s0));
}

}  // namespace lkrep
