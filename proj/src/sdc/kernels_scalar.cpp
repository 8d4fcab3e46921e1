#include "sdc/kernels.hpp"

namespace sdc::kern {
namespace {

void xored_weights_scalar(const uint64_t* base, const uint64_t* table,
                          size_t count, size_t wpc, uint16_t* weights) {
    for (size_t i = 0; i < count; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = table + i * wpc;
        for (size_t j = 0; j < wpc; ++j)
            acc += static_cast<uint64_t>(__builtin_popcountll(base[j] ^ row[j]));
        weights[i] = static_cast<uint16_t>(acc);
    }
}

uint64_t popcount_words_scalar(const uint64_t* w, size_t nwords) {
    uint64_t acc = 0;
    for (size_t j = 0; j < nwords; ++j)
        acc += static_cast<uint64_t>(__builtin_popcountll(w[j]));
    return acc;
}

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
    for (size_t j = 0; j < nwords; ++j) dst[j] ^= src[j];
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", xored_weights_scalar, popcount_words_scalar,
                         xor_into_scalar};
    return ops;
}

}  // namespace sdc::kern
