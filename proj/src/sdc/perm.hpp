#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/linear_code.hpp"

namespace sdc {

// permutation of coordinates, stored 0-based; the action moves the value at
// position i to position img[i]
struct Permutation {
    std::vector<size_t> img;

    size_t n() const { return img.size(); }
    static Permutation identity(size_t n);
    // 1-indexed disjoint cycle text, e.g. "(1,2,3)(4,5)"; fixed points omitted
    static Permutation parse_cycles(const std::string& text, size_t n);
    std::string to_cycles() const;

    Permutation inverse() const;
    Permutation then(const Permutation& o) const;  // apply this first, then o
    Permutation power(uint64_t e) const;
    uint64_t order() const;

    bool operator==(const Permutation&) const = default;
};

BitVector apply(const Permutation& s, const BitVector& v);
LinearCode apply(const Permutation& s, const LinearCode& c);
bool is_automorphism(const LinearCode& c, const Permutation& s);

// cycles listed with their smallest element first, sorted by that element;
// fixed points follow in ascending order
struct CycleLayout {
    size_t n = 0;
    std::vector<std::vector<size_t>> cycles;
    std::vector<size_t> fixed;

    size_t cell_count() const { return cycles.size() + fixed.size(); }
};

CycleLayout cycle_layout(const Permutation& s);

struct AutType {
    enum class Kind { generic, prime, uniform_composite, mixed };
    Kind kind = Kind::generic;
    uint64_t order = 1;
    size_t p = 0, r = 0;          // prime/uniform use p; mixed uses p < r
    size_t c = 0, f = 0;          // cycle and fixed point counts
    size_t s1 = 0, s2 = 0, s3 = 0;  // mixed: cycles of length p, r, p*r
    std::vector<std::pair<size_t, size_t>> cycle_type;  // generic: (length, count)

    size_t degree() const;
    std::string format() const;
};

AutType aut_type(const Permutation& s);

}  // namespace sdc
