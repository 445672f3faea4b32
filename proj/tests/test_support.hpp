#pragma once

#include <random>

#include "lkrep/laurent.hpp"
#include "lkrep/matrix.hpp"

namespace lkrep::testing {

// Small seeded generators for property-style tests.

inline Laurent random_laurent(std::mt19937_64& rng, int max_terms = 4, int exp_range = 3,
                              long coeff_range = 5) {
    Laurent out;
    const int terms = static_cast<int>(rng() % (max_terms + 1));
    for (int k = 0; k < terms; ++k) {
        const int es = static_cast<int>(rng() % (2 * exp_range + 1)) - exp_range;
        const int et = static_cast<int>(rng() % (2 * exp_range + 1)) - exp_range;
        const long c = static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range;
        out += Laurent::monomial(c, es, et);
    }
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 9) {
    const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
    const long den = static_cast<long>(rng() % range) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long range = 9) {
    while (true) {
        Rational r = random_rational(rng, range);
        if (r != 0) return r;
    }
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, int rows, int cols, long range = 9) {
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = random_rational(rng, range);
    return m;
}

}  // namespace lkrep::testing
