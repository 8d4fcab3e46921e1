// AVX2 backend, compiled with -mavx2 in its own translation unit.
// Popcounts use the nibble lookup trick: per-byte counts via two PSHUFB
// table lookups, then horizontal sums with PSADBW.
#include "sdc/kernels.hpp"

#include <immintrin.h>

namespace sdc::kern {
namespace {

inline __m256i byte_counts(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

void xored_weights_avx2(const uint64_t* base, const uint64_t* table,
                        size_t count, size_t wpc, uint16_t* weights) {
    size_t i = 0;
    if (wpc == 2) {
        // two 128-bit codewords per vector
        const __m128i b128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(base));
        const __m256i vbase = _mm256_broadcastsi128_si256(b128);
        for (; i + 2 <= count; i += 2) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + i * 2));
            __m256i s = _mm256_sad_epu8(byte_counts(_mm256_xor_si256(v, vbase)),
                                        _mm256_setzero_si256());
            __m128i s0 = _mm256_castsi256_si128(s);
            __m128i s1 = _mm256_extracti128_si256(s, 1);
            weights[i] = static_cast<uint16_t>(_mm_extract_epi64(s0, 0) + _mm_extract_epi64(s0, 1));
            weights[i + 1] = static_cast<uint16_t>(_mm_extract_epi64(s1, 0) + _mm_extract_epi64(s1, 1));
        }
    } else if (wpc == 1) {
        // four 64-bit codewords per vector
        const __m256i vbase = _mm256_set1_epi64x(static_cast<long long>(base[0]));
        for (; i + 4 <= count; i += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + i));
            __m256i s = _mm256_sad_epu8(byte_counts(_mm256_xor_si256(v, vbase)),
                                        _mm256_setzero_si256());
            alignas(32) uint64_t out[4];
            _mm256_store_si256(reinterpret_cast<__m256i*>(out), s);
            weights[i] = static_cast<uint16_t>(out[0]);
            weights[i + 1] = static_cast<uint16_t>(out[1]);
            weights[i + 2] = static_cast<uint16_t>(out[2]);
            weights[i + 3] = static_cast<uint16_t>(out[3]);
        }
    }
    for (; i < count; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = table + i * wpc;
        for (size_t j = 0; j < wpc; ++j)
            acc += static_cast<uint64_t>(__builtin_popcountll(base[j] ^ row[j]));
        weights[i] = static_cast<uint16_t>(acc);
    }
}

uint64_t popcount_words_avx2(const uint64_t* w, size_t nwords) {
    size_t j = 0;
    uint64_t acc = 0;
    __m256i vacc = _mm256_setzero_si256();
    for (; j + 4 <= nwords; j += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
        vacc = _mm256_add_epi64(vacc, _mm256_sad_epu8(byte_counts(v), _mm256_setzero_si256()));
    }
    alignas(32) uint64_t out[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), vacc);
    acc = out[0] + out[1] + out[2] + out[3];
    for (; j < nwords; ++j) acc += static_cast<uint64_t>(__builtin_popcountll(w[j]));
    return acc;
}

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
    size_t j = 0;
    for (; j + 4 <= nwords; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_xor_si256(a, b));
    }
    for (; j < nwords; ++j) dst[j] ^= src[j];
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{"avx2", xored_weights_avx2, popcount_words_avx2, xor_into_avx2};
    return ops;
}

}  // namespace sdc::kern
