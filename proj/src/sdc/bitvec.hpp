#pragma once
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

// Bit vector over GF(2), coordinate i stored at bit (i % 64) of word (i / 64).
struct BitVector {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVector() = default;
    explicit BitVector(size_t len) : n(len), w((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s);

    size_t nwords() const { return w.size(); }
    bool get(size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
    void set(size_t i, bool b) {
        uint64_t m = uint64_t{1} << (i % 64);
        if (b) w[i / 64] |= m; else w[i / 64] &= ~m;
    }
    void flip(size_t i) { w[i / 64] ^= uint64_t{1} << (i % 64); }

    size_t weight() const;
    bool is_zero() const;
    bool dot(const BitVector& o) const;  // standard inner product over GF(2)

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    BitVector operator&(const BitVector& o) const;

    bool operator==(const BitVector&) const = default;

    // lexicographic order with coordinate 0 most significant, 0 < 1
    bool lex_less(const BitVector& o) const;

    std::string to_string() const;
};

}  // namespace sdc
