#include "sdc/bitvec.hpp"

#include <stdexcept>

#include "sdc/kernels.hpp"

namespace sdc {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(i, true);
        else if (s[i] != '0') throw std::invalid_argument("bit string must contain only 0/1");
    }
    return v;
}

size_t BitVector::weight() const {
    return static_cast<size_t>(kern::active_ops().popcount_words(w.data(), w.size()));
}

bool BitVector::is_zero() const {
    for (uint64_t x : w) if (x) return false;
    return true;
}

bool BitVector::dot(const BitVector& o) const {
    if (n != o.n) throw std::invalid_argument("dot: length mismatch");
    uint64_t acc = 0;
    for (size_t j = 0; j < w.size(); ++j) acc ^= w[j] & o.w[j];
    return __builtin_parityll(acc);
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n != o.n) throw std::invalid_argument("xor: length mismatch");
    kern::active_ops().xor_into(w.data(), o.w.data(), w.size());
    return *this;
}

BitVector BitVector::operator&(const BitVector& o) const {
    if (n != o.n) throw std::invalid_argument("and: length mismatch");
    BitVector r(n);
    for (size_t j = 0; j < w.size(); ++j) r.w[j] = w[j] & o.w[j];
    return r;
}

bool BitVector::lex_less(const BitVector& o) const {
    if (n != o.n) throw std::invalid_argument("lex_less: length mismatch");
    for (size_t j = 0; j < w.size(); ++j) {
        uint64_t diff = w[j] ^ o.w[j];
        if (diff) {
            // lowest differing coordinate decides; 0 beats 1 there
            uint64_t bit = diff & (~diff + 1);
            return (w[j] & bit) == 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(n, '0');
    for (size_t i = 0; i < n; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace sdc
