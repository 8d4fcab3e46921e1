#pragma once

#include <utility>
#include <vector>

#include "sdc/bignum.hpp"
#include "sdc/linear_code.hpp"
#include "sdc/perm.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

// subcode of words invariant under the permutation (checked automorphism)
LinearCode fixed_code(const LinearCode& c, const Permutation& s);

// words with even weight on every cell of the layout, fixed points included
// (so they vanish there)
LinearCode even_part(const LinearCode& c, const Permutation& s);

// one coordinate per cell: the smallest element of each cycle, then the fixed
// points; input rows must be constant on every cycle
LinearCode project(const LinearCode& f, const CycleLayout& layout);
BitVector project(const BitVector& v, const CycleLayout& layout);

// spread the first c coordinates back over their cycles
LinearCode lift(const LinearCode& d, const CycleLayout& layout);
BitVector lift(const BitVector& v, const CycleLayout& layout);

struct MaschkeReport {
    uint64_t p = 0;  // odd prime order
    size_t c = 0, f = 0;
    size_t dim_fixed = 0, dim_even = 0, expected_dim_even = 0;
    bool trivial_intersection = false;
    bool spans = false;
    bool ok() const {
        return trivial_intersection && spans && dim_even == expected_dim_even;
    }
};

// decomposition facts for an odd-prime-order automorphism:
// C = F + E with F n E = 0 and dim E = (p-1)c/2
MaschkeReport maschke_verify(const LinearCode& c, const Permutation& s);

struct CongruenceReport {
    BigInt p;
    bool ok = false;
    std::vector<size_t> failing_weights;
};

// coefficient-wise A_i = A_i^F (mod p) between the code and its fixed code
CongruenceReport fixed_code_congruence(const LinearCode& c, const Permutation& s,
                                       const BigInt& p);

// prescribed residues checked against an enumerator alone
CongruenceReport enum_congruence(const WeightEnum& w, const BigInt& p,
                                 const std::vector<std::pair<size_t, BigInt>>& residues);

// single-coefficient residue, for enumerator-level congruence arguments
BigInt coeff_mod(const WeightEnum& w, size_t i, const BigInt& p);

}  // namespace sdc
