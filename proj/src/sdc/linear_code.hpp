#pragma once
#include <optional>
#include <vector>

#include "sdc/bitvec.hpp"

namespace sdc {

// Binary linear code held in canonical form: the generator rows are the
// reduced row echelon basis with strictly increasing pivot columns, so two
// codes are equal as sets iff their row lists are identical.
struct LinearCode {
    size_t n = 0;
    std::vector<BitVector> rows;
    std::vector<size_t> pivots;

    LinearCode() = default;
    explicit LinearCode(size_t len) : n(len) {}

    // canonicalizes (and drops dependent rows)
    static LinearCode from_rows(size_t n, std::vector<BitVector> gens);

    size_t k() const { return rows.size(); }
    bool contains(const BitVector& v) const;
    // reduce v by the basis; result is the canonical coset representative
    BitVector reduce(BitVector v) const;
    BitVector codeword(uint64_t mask) const;  // xor of rows selected by mask bits

    bool operator==(const LinearCode&) const = default;
};

enum class CodeType { not_self_dual, type1, type2 };

LinearCode dual(const LinearCode& c);
LinearCode sum_code(const LinearCode& a, const LinearCode& b);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);
LinearCode puncture(const LinearCode& c, const std::vector<size_t>& coords);
LinearCode shorten(const LinearCode& c, const std::vector<size_t>& coords);

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
bool is_doubly_even(const LinearCode& c);
CodeType code_type(const LinearCode& c);

// even-weight-subcode style splitter: words of weight divisible by 4
// inside a self-dual code (index 1 or 2)
LinearCode doubly_even_subcode(const LinearCode& c);

BitVector all_ones(size_t n);

}  // namespace sdc
