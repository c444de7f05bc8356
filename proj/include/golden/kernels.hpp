#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Integer quadratic-form kernels: the arithmetic inner loops of theta binning
// and isometry search. A scalar reference implementation always exists; an
// AVX2 variant is selected at runtime when the CPU supports it. Both are
// exact for inputs within the documented ranges.
namespace golden::kernels {

using i32 = int32_t;
using i64 = int64_t;

// Exactness ranges: m <= KMAX_DIM, |G| < KMAX_GRAM, |x| < KMAX_COORD keep
// every intermediate below 2^52.
inline constexpr int KMAX_DIM = 64;
inline constexpr i32 KMAX_GRAM = 1 << 16;
inline constexpr i32 KMAX_COORD = 1 << 12;

bool fits(const i32* gram, int m, i64 max_abs_coord);

// x^T G x for row-major symmetric G.
i64 qform_scalar(const i32* gram, int m, const i32* x);
// x^T G y.
i64 bilinear_scalar(const i32* gram, int m, const i32* x, const i32* y);
// out[v] = xs[v]^T G xs[v] for row-major batch xs (count x m).
void qform_batch_scalar(const i32* gram, int m, const i32* xs, size_t count, i64* out);

#if defined(__x86_64__) || defined(_M_X64)
i64 qform_avx2(const i32* gram, int m, const i32* x);
i64 bilinear_avx2(const i32* gram, int m, const i32* x, const i32* y);
void qform_batch_avx2(const i32* gram, int m, const i32* xs, size_t count, i64* out);
#endif

enum class Backend { scalar, avx2 };

Backend active_backend();
// Test hook; falls back to scalar when the requested ISA is unavailable.
void force_backend(Backend b);
std::string backend_name();

i64 qform(const i32* gram, int m, const i32* x);
i64 bilinear(const i32* gram, int m, const i32* x, const i32* y);
void qform_batch(const i32* gram, int m, const i32* xs, size_t count, i64* out);

// Convenience wrappers for threaded batch evaluation with deterministic output.
void qform_batch_threaded(const i32* gram, int m, const i32* xs, size_t count, i64* out,
                          unsigned threads);

}  // namespace golden::kernels
