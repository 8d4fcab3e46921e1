#pragma once

#include <iosfwd>
#include <vector>

#include "sdc/linear_code.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

// quarters of c0-dual for a type I self-dual code C: C = C0 u (C0+r2) with C0
// the doubly even subcode, shadow = (C0+r1) u (C0+r3). representatives are
// canonical (zero on the pivot columns of C0), which makes each the
// lexicographically least vector of its coset.
struct CosetSplit {
    LinearCode c0;
    BitVector r2, r1, r3;
    bool degenerate = false;  // type II input: shadow is the code itself

    bool operator==(const CosetSplit&) const = default;
};

// r1 labels the shadow coset holding the lexicographically smallest shadow
// vector; r3 = reduce(r1 + r2)
CosetSplit coset_split(const LinearCode& c);

struct ShadowResult {
    WeightEnum enumerator;
    size_t min_weight = 0;                // n+1 when the shadow is empty
    std::vector<BitVector> witnesses;     // least-weight shadow vectors, capped
};

// direct enumeration over the shadow cosets (dimension-limited)
ShadowResult shadow(const LinearCode& c, size_t witness_cap = 4);

void write_coset_split(std::ostream& out, const CosetSplit& cs);
CosetSplit read_coset_split(std::istream& in);

}  // namespace sdc
