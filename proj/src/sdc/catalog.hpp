#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/linear_code.hpp"
#include "sdc/perm.hpp"

namespace sdc {

// quadratic-residue construction with a parity coordinate appended;
// coordinates are 0..p-1 then the point at infinity
LinearCode extended_qr(uint64_t p);

LinearCode golay24();      // extended_qr(23), [24, 12, 8] doubly-even
LinearCode e8();           // extended_qr(7), [8, 4, 4] doubly-even
LinearCode e8_cubed();     // three e8 blocks, [24, 12, 4]
LinearCode b12();          // [I | J - I] of size 6, [12, 6, 4]
LinearCode tenfive2();     // [I | I] of size 5, [10, 5, 2]
LinearCode i2();           // {00, 11}
LinearCode i_n(size_t n);  // direct sum of n/2 copies of i2
LinearCode golay_child();  // golay24 shortened through its last two coordinates

// fractional linear map z -> (az + b)/(cz + d) on 0..p-1 plus infinity
Permutation mobius_perm(uint64_t p, uint64_t a, uint64_t b, uint64_t c, uint64_t d);

Permutation g24_translation();       // z -> z + 1, one 23-cycle
Permutation g24_order3();            // z -> 1/(1 - z), fixed point free
Permutation g24_order6();            // first order-6 map in lexicographic search
Permutation e8_cubed_translation();  // z -> z + 1 on each block

struct CatalogAut {
    std::string name;
    Permutation perm;
    std::string expected_type;  // aut_type(...).format()
};

struct CatalogEntry {
    std::string name;
    LinearCode code;
    size_t n = 0, k = 0, d = 0;
    CodeType type = CodeType::not_self_dual;
    std::vector<CatalogAut> automorphisms;
};

// every declared property here is re-derived by the test suite
const std::vector<CatalogEntry>& entries();

}  // namespace sdc
