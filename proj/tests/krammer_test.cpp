#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkrep/krammer.hpp"
#include "lkrep/linalg.hpp"
#include "lkrep/rewrite.hpp"
#include "test_support.hpp"

using namespace lkrep;

namespace {
const Laurent one(1);
const Laurent q = Laurent::q();
const Laurent t = Laurent::t();
}  // namespace

TEST_CASE("pair basis") {
    const PairBasis basis(4);
    CHECK(basis.size() == 6);
    CHECK(basis.pair(0) == std::pair<int, int>{1, 2});
    CHECK(basis.pair(5) == std::pair<int, int>{3, 4});
    for (int idx = 0; idx < basis.size(); ++idx) {
        auto [i, j] = basis.pair(idx);
        CHECK(basis.index(i, j) == idx);
    }
    CHECK(basis.label(1) == "F(1,3)");
    CHECK_THROWS_AS(basis.index(2, 2), dimension_error);
}

TEST_CASE("n=2 generator is the 1x1 matrix -tq^2") {
    const RingMatrix g = krammer_generator(2, 1, 1);
    REQUIRE(g.rows() == 1);
    CHECK(g.at(0, 0) == -(t * q * q));
}

TEST_CASE("n=3 generator columns follow the case table") {
    const PairBasis basis(3);
    const RingMatrix g = krammer_generator(3, 1, 1);
    const int c23 = basis.index(2, 3);
    // sigma_1(F(2,3)) = q F(1,3) + (q^2 - q) F(1,2) + (1-q) F(2,3)
    CHECK(g.at(basis.index(1, 3), c23) == q);
    CHECK(g.at(basis.index(1, 2), c23) == q * q - q);
    CHECK(g.at(c23, c23) == one - q);
    // sigma_1(F(1,2)) = -tq^2 F(1,2); sigma_1(F(1,3)) = F(2,3)
    CHECK(g.at(basis.index(1, 2), basis.index(1, 2)) == -(t * q * q));
    CHECK(g.at(basis.index(2, 3), basis.index(1, 3)) == one);

    CHECK_THROWS_AS(krammer_generator(3, 3, 1), dimension_error);
    CHECK_THROWS_AS(krammer_generator(3, 0, 1), dimension_error);
}

TEST_CASE("generator inverses multiply to the identity") {
    for (int n = 2; n <= 5; ++n) {
        const int d = n * (n - 1) / 2;
        for (int i = 1; i <= n - 1; ++i) {
            CHECK(krammer_generator(n, i, 1) * krammer_generator(n, i, -1) ==
                  RingMatrix::identity(d));
            CHECK(krammer_generator(n, i, -1) * krammer_generator(n, i, 1) ==
                  RingMatrix::identity(d));
        }
    }
}

TEST_CASE("braid relations and far commutation, symbolically") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<RingMatrix> g;
        for (int i = 1; i <= n - 1; ++i) g.push_back(krammer_generator(n, i, 1));
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            CHECK(g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 2; j < g.size(); ++j)
                CHECK(g[i] * g[j] == g[j] * g[i]);
    }
}

TEST_CASE("word evaluation") {
    CHECK(rep_matrix(BraidWord(4)) == RingMatrix::identity(6));
    CHECK(rep_matrix(BraidWord(3, {1, 2, 1})) == rep_matrix(BraidWord(3, {2, 1, 2})));
    CHECK(rep_matrix(BraidWord(4, {1, 3})) == rep_matrix(BraidWord(4, {3, 1})));

    std::mt19937_64 rng(51);
    for (int k = 0; k < 10; ++k) {
        const BraidWord a = random_word(4, 4, rng());
        const BraidWord b = random_word(4, 4, rng());
        CHECK(rep_matrix(word_concat(a, b)) == rep_matrix(a) * rep_matrix(b));
    }
}

TEST_CASE("triviality and equality decisions") {
    CHECK(is_trivial(BraidWord(3, {1, -1})));
    CHECK(is_trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})));
    CHECK_FALSE(is_trivial(BraidWord(3, {1})));
    CHECK(words_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
    CHECK_FALSE(words_equal(BraidWord(4, {1}), BraidWord(4, {2})));
    CHECK_THROWS_AS(words_equal(BraidWord(3, {1}), BraidWord(4, {1})), dimension_error);

    // Nonzero exponent sum forces nontriviality (oracle: exponent_sum).
    std::mt19937_64 rng(52);
    for (int k = 0; k < 40; ++k) {
        const BraidWord w = random_word(4, 1 + rng() % 10, rng());
        if (w.exponent_sum() != 0) CHECK_FALSE(is_trivial(w));
    }
}

TEST_CASE("inverse law under the representation") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 10; ++k) {
        const BraidWord w = random_word(4, 6, rng());
        CHECK(rep_matrix(word_concat(w, w.inverse())) == RingMatrix::identity(6));
    }
}

TEST_CASE("determinant grading by exponent sum") {
    for (int n : {3, 4}) {
        const Laurent unit = ring_det(krammer_generator(n, 1, 1));
        CHECK(unit.is_unit());
        std::mt19937_64 rng(54);
        for (int k = 0; k < 6; ++k) {
            const BraidWord w = random_word(n, 5, rng());
            CHECK(ring_det(rep_matrix(w)) == unit.pow(w.exponent_sum()));
        }
    }
}

TEST_CASE("rewritten words stay equal") {
    std::mt19937_64 rng(55);
    for (int k = 0; k < 12; ++k) {
        const BraidWord w = random_word(4, 6, rng());
        const BraidWord v = rewrite_equivalent(w, 15, 100 + k);
        CHECK(words_equal(w, v));
    }
}

TEST_CASE("fingerprints") {
    // Empty word: char poly of the identity, (x-1)^d.
    const auto id_fp = rep_fingerprint(BraidWord(4));
    REQUIRE(id_fp.size() == 7);
    long binom = 1;
    for (int k = 0; k <= 6; ++k) {
        CHECK(id_fp[k] == Rational((k % 2 == 0) ? binom : -binom));
        binom = binom * (6 - k) / (k + 1);
    }

    // n=2, sigma_1: the 1x1 matrix -tq^2 evaluates to 4/9, char poly x - 4/9.
    const auto fp = rep_fingerprint(BraidWord(2, {1}));
    REQUIRE(fp.size() == 2);
    CHECK(fp[0] == 1);
    CHECK(fp[1] == Rational(-4, 9));

    // Conjugation invariance.
    std::mt19937_64 rng(56);
    for (int k = 0; k < 8; ++k) {
        const BraidWord w = random_word(4, 5, rng());
        const BraidWord g = random_word(4, 4, rng());
        const BraidWord conj = word_concat(word_concat(g, w), g.inverse());
        CHECK(rep_fingerprint(w) == rep_fingerprint(conj));
    }
}
