#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lkrep {

// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed braid-word text. Carries the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Shape disagreement: matrix dimensions, strand counts, generator indices.
class dimension_error : public error {
public:
    using error::error;
};

// lp-style evaluation at s = 0 or t = 0.
class zero_substitution_error : public error {
public:
    using error::error;
};

// Sample point violates the q^2 != 1, q^3 != 1 hypotheses (or s0 = 0).
class inadmissible_sample_error : public error {
public:
    using error::error;
};

// Sample point is admissible but produced a non-generic dimension; the
// caller is expected to retry with a different sample.
class degenerate_sample_error : public error {
public:
    using error::error;
};

// quotient_action called with an operator that does not preserve the subspace.
class not_invariant_error : public error {
public:
    using error::error;
};

}  // namespace lkrep
