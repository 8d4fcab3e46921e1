#pragma once

#include <cstdint>
#include <string>

#include "sdc/perm.hpp"

namespace sdc {

// largest a with p^a | n
uint64_t sylow_bound(uint64_t n, uint64_t p);

// a fixed point free action of the full cyclic group makes the code a free
// module over the group ring, so the order must divide the dimension
bool free_module_obstruction(uint64_t order, uint64_t dim);

struct TypeVerdict {
    bool allowed = false;
    std::string reason;
};

// admissibility of a cycle shape for a putative [120, 60, 24] code.
// Shapes outside the known table are excluded with a short reason; the
// identity is always allowed.
TypeVerdict check_type_allowed(const AutType& t);

}  // namespace sdc
