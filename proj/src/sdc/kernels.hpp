#pragma once
#include <cstddef>
#include <cstdint>

namespace sdc::kern {

// Batch primitives on packed GF(2) words. Every backend implements the same
// contract and must produce bit-identical results; the dispatcher picks the
// widest one the CPU supports unless SDC_KERNELS=scalar is set.
struct Ops {
    const char* name;
    // weights[i] = popcount(base ^ table[i*wpc .. (i+1)*wpc)) for i in [0,count)
    void (*xored_weights)(const uint64_t* base, const uint64_t* table,
                          size_t count, size_t wpc, uint16_t* weights);
    uint64_t (*popcount_words)(const uint64_t* w, size_t nwords);
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nwords);
};

const Ops& scalar_ops();
const Ops& active_ops();

}  // namespace sdc::kern
