// NEON backend, built only on aarch64.
#include "sdc/kernels.hpp"

#include <arm_neon.h>

namespace sdc::kern {
namespace {

inline uint64_t popcount128(uint8x16_t v) {
    return vaddvq_u8(vcntq_u8(v));
}

void xored_weights_neon(const uint64_t* base, const uint64_t* table,
                        size_t count, size_t wpc, uint16_t* weights) {
    if (wpc == 2) {
        uint8x16_t vbase = vld1q_u8(reinterpret_cast<const uint8_t*>(base));
        for (size_t i = 0; i < count; ++i) {
            uint8x16_t v = vld1q_u8(reinterpret_cast<const uint8_t*>(table + i * 2));
            weights[i] = static_cast<uint16_t>(popcount128(veorq_u8(v, vbase)));
        }
        return;
    }
    for (size_t i = 0; i < count; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = table + i * wpc;
        for (size_t j = 0; j < wpc; ++j)
            acc += static_cast<uint64_t>(__builtin_popcountll(base[j] ^ row[j]));
        weights[i] = static_cast<uint16_t>(acc);
    }
}

uint64_t popcount_words_neon(const uint64_t* w, size_t nwords) {
    uint64_t acc = 0;
    size_t j = 0;
    for (; j + 2 <= nwords; j += 2)
        acc += popcount128(vld1q_u8(reinterpret_cast<const uint8_t*>(w + j)));
    for (; j < nwords; ++j) acc += static_cast<uint64_t>(__builtin_popcountll(w[j]));
    return acc;
}

void xor_into_neon(uint64_t* dst, const uint64_t* src, size_t nwords) {
    for (size_t j = 0; j < nwords; ++j) dst[j] ^= src[j];
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{"neon", xored_weights_neon, popcount_words_neon, xor_into_neon};
    return ops;
}

}  // namespace sdc::kern
