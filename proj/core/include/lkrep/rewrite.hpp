#pragma once

#include <cstdint>

#include "lkrep/braid.hpp"

namespace lkrep {

// Applies `steps` random rewrites that each preserve the braid class:
// insertion of a canceling pair, swap of a far-commuting adjacent pair
// (|i-j| > 1), or a braid-relation move aba -> bab (|i-j| = 1, equal
// signs). Deterministic for a fixed seed.
BraidWord rewrite_equivalent(const BraidWord& w, int steps, std::uint64_t seed);

}  // namespace lkrep
