#pragma once

#include <gmpxx.h>

#include <string>

#include "lkrep/errors.hpp"

namespace lkrep {

// Exact big rational. mpq_class keeps the invariants we need: reduced
// fraction, positive denominator, arbitrary-precision parts.
using Rational = mpq_class;

// x^e for integer e of either sign. Throws zero_substitution_error on 0^-e.
Rational rational_pow(const Rational& x, long e);

// Parses "p", "-p" or "p/q"; throws parse_error on malformed input and
// dimension_error on a zero denominator.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace lkrep
