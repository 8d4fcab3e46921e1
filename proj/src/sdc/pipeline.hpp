#pragma once

#include <cstdint>
#include <vector>

#include "sdc/fixed_code.hpp"
#include "sdc/linear_code.hpp"
#include "sdc/perm.hpp"

namespace sdc {

struct PairVerdict {
    size_t d_index = 0, e_index = 0;
    bool witness_found = false;
    BitVector witness;  // weight below threshold when found
};

struct PipelineResult {
    bool excluded = false;  // every pair produced a witness
    bool vacuous = false;   // no pairs were formed at all
    std::vector<PairVerdict> pairs;
};

// lift every candidate pair through the two layouts, sum, and look for a
// codeword below the weight threshold
PipelineResult exclusion_pipeline(const CycleLayout& layout_p,
                                  const std::vector<LinearCode>& candidates_d,
                                  const CycleLayout& layout_q,
                                  const std::vector<LinearCode>& candidates_e,
                                  size_t threshold);

}  // namespace sdc
