#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdc/linear_code.hpp"

namespace sdc {

// A_0..A_n by running through all 2^k codewords; k must be at most 30
std::vector<uint64_t> weight_distribution(const LinearCode& c);

// least nonzero codeword weight, 0 for the zero code
size_t min_distance(const LinearCode& c);

// some codeword with 0 < wt < bound, if one exists
std::optional<BitVector> distance_below(const LinearCode& c, size_t bound);

// generators rewritten over pairwise disjoint information sets; the first
// entry is the canonical form, later ones pivot in columns not used before
std::vector<LinearCode> systematic_forms(const LinearCode& c);

}  // namespace sdc
