#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lkrep/errors.hpp"

namespace lkrep {

/*
 * A braid word on n strands: a sequence of signed Artin generator indices.
 * Letter k > 0 means sigma_k, k < 0 means sigma_{|k|}^{-1}; 1 <= |k| <= n-1.
 * Words are not normalized beyond free reduction; genuine equality is
 * decided through the faithful representation (see krammer.hpp).
 */
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters);
    explicit BraidWord(int strands) : BraidWord(strands, {}) {}

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const BraidWord&) const = default;

    // Sum of letter signs; a group homomorphism B_n -> Z.
    int exponent_sum() const;

    BraidWord inverse() const;

    // Printable form using the "s" syntax, e.g. "s1 s2^-1".
    std::string str() const;

private:
    int strands_;
    std::vector<int> letters_;
};

// Accepts whitespace-separated tokens "s3", "s3^-1", "s3^4", and bare signed
// integers "3", "-3" (also with exponents, "2^3"). Exponents expand to
// repeated letters. Throws parse_error (with token position) on bad syntax
// and on generator indices with |k| >= n.
BraidWord parse_word(const std::string& text, int strands);

BraidWord word_concat(const BraidWord& a, const BraidWord& b);

// Cancels adjacent k, -k pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Deterministic freely reduced random word: letters uniform over
// +-{1..n-1}, redrawing any letter that would cancel its predecessor.
BraidWord random_word(int strands, std::size_t length, std::uint64_t seed);

}  // namespace lkrep
