#include "lkrep/krammer.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lkrep/linalg.hpp"

namespace lkrep {

PairBasis::PairBasis(int n) : n_(n) {
    if (n < 2) throw dimension_error("PairBasis needs n >= 2");
    pairs_.reserve(n * (n - 1) / 2);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
}

int PairBasis::index(int i, int j) const {
    if (i < 1 || j <= i || j > n_)
        throw dimension_error("PairBasis::index: pair out of range");
    // Pairs starting with i' < i come first, (i-1) blocks of sizes n-1, ...
    const int before = (i - 1) * n_ - (i * (i - 1)) / 2;
    return before + (j - i - 1);
}

std::string PairBasis::label(int index) const {
    auto [i, j] = pairs_[index];
    return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

namespace {

// One column of the action: the image of F(j,k) under sigma_i, written in
// the F basis. The six cases are mutually exclusive for j < k.
void generator_column(RingMatrix& m, const PairBasis& basis, int i, int col) {
    auto [j, k] = basis.pair(col);
    const Laurent q = Laurent::q();
    const Laurent t = Laurent::t();
    const Laurent one(1);

    auto add = [&](int a, int b, const Laurent& coeff) {
        m.at(basis.index(a, b), col) += coeff;
    };

    if (i == j - 1) {  // j < k rules out i = k-1 or i = k here
        add(i, k, q);
        add(i, j, q * q - q);
        add(j, k, one - q);
    } else if (i == j && i == k - 1) {
        add(j, k, -(t * q * q));
    } else if (i == j) {  // i = j != k-1
        add(j + 1, k, one);
    } else if (i == k - 1) {  // i = k-1 != j
        add(j, i, q);
        add(j, k, one - q);
        add(i, k, (one - q) * q * t);
    } else if (i == k) {
        add(j, k + 1, one);
    } else {  // i not adjacent to the pair
        add(j, k, one);
    }
}

RingMatrix build_generator(int n, int i) {
    PairBasis basis(n);
    RingMatrix m(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) generator_column(m, basis, i, col);
    return m;
}

std::map<std::tuple<int, int, int>, RingMatrix> generator_cache;
std::mutex generator_cache_mutex;

}  // namespace

RingMatrix krammer_generator(int n, int i, int sign) {
    if (n < 2) throw dimension_error("krammer_generator needs n >= 2");
    if (i < 1 || i > n - 1)
        throw dimension_error("krammer_generator: index " + std::to_string(i) +
                              " out of range for n = " + std::to_string(n));
    if (sign != 1 && sign != -1) throw dimension_error("krammer_generator: sign must be +-1");

    std::lock_guard<std::mutex> lock(generator_cache_mutex);
    const auto key = std::make_tuple(n, i, sign);
    if (auto it = generator_cache.find(key); it != generator_cache.end()) return it->second;

    RingMatrix result = build_generator(n, i);
    if (sign == -1) {
        auto inv = ring_inverse(result);
        if (!inv) throw error("krammer_generator: generator is not invertible over the ring");
        result = std::move(*inv);
    }
    generator_cache.emplace(key, result);
    return result;
}

RingMatrix rep_matrix(const BraidWord& w) {
    const PairBasis basis(w.strands());
    RingMatrix acc = RingMatrix::identity(basis.size());
    for (int k : w.letters())
        acc = acc * krammer_generator(w.strands(), std::abs(k), k > 0 ? 1 : -1);
    return acc;
}

bool is_trivial(const BraidWord& w) {
    return rep_matrix(w) == RingMatrix::identity(PairBasis(w.strands()).size());
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw dimension_error("words_equal: strand counts disagree");
    return rep_matrix(a) == rep_matrix(b);
}

Rational fingerprint_s0() { return Rational(2, 3); }
Rational fingerprint_t0() { return Rational(-9, 4); }

std::vector<Rational> rep_fingerprint(const BraidWord& w) {
    return char_poly(eval_matrix(rep_matrix(w), fingerprint_s0(), fingerprint_t0()));
}

}  // namespace lkrep
