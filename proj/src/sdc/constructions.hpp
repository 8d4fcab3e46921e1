#pragma once

#include "sdc/cosets.hpp"
#include "sdc/linear_code.hpp"

namespace sdc {

// subcode with equal values at the two positions, punctured there; the result
// is self-dual of length n-2
LinearCode child(const LinearCode& c, size_t pos_i, size_t pos_j);

// length n+2 span of the tagged cosets (0,0,C0), (1,1,C2), (1,0,C1),
// (0,1,C3); needs n = 2 (mod 4) and a type I input. the doubly even coset
// keeps tag weight 0 mod 4 and the two shadow cosets pick up the odd tag
// their weight class needs
LinearCode shadow_extend(const LinearCode& c);

// D = C n <u>-perp extended by u itself; self-dual neighbor of C, doubly even
// when C is doubly even and wt(u) = 0 (mod 4)
LinearCode neighbor_through(const LinearCode& c, const BitVector& u);

// intersection dimension n/2 - 1
bool are_neighbors(const LinearCode& a, const LinearCode& b);

}  // namespace sdc
