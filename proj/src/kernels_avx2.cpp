#include <golden/kernels.hpp>

#include <immintrin.h>

namespace golden::kernels {

namespace {

inline i64 hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return _mm_extract_epi64(s, 0) + _mm_extract_epi64(s, 1);
}

// dot of two int32 arrays with exact 64-bit accumulation
inline i64 dot_i32(const i32* a, const i32* b, int m) {
    __m256i acc = _mm256_setzero_si256();
    int l = 0;
    for (; l + 4 <= m; l += 4) {
        __m256i a64 = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + l)));
        __m256i b64 = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + l)));
        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(a64, b64));
    }
    i64 dot = hsum_epi64(acc);
    for (; l < m; ++l) dot += static_cast<i64>(a[l]) * b[l];
    return dot;
}

}  // namespace

i64 qform_avx2(const i32* gram, int m, const i32* x) {
    i64 total = 0;
    for (int k = 0; k < m; ++k)
        total += static_cast<i64>(x[k]) * dot_i32(gram + static_cast<size_t>(k) * m, x, m);
    return total;
}

i64 bilinear_avx2(const i32* gram, int m, const i32* x, const i32* y) {
    i64 total = 0;
    for (int k = 0; k < m; ++k)
        total += static_cast<i64>(x[k]) * dot_i32(gram + static_cast<size_t>(k) * m, y, m);
    return total;
}

void qform_batch_avx2(const i32* gram, int m, const i32* xs, size_t count, i64* out) {
    for (size_t v = 0; v < count; ++v)
        out[v] = qform_avx2(gram, m, xs + v * static_cast<size_t>(m));
}

}  // namespace golden::kernels
