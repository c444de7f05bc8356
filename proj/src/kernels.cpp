#include <golden/kernels.hpp>

#include <atomic>
#include <cstdlib>
#include <thread>

namespace golden::kernels {

bool fits(const i32* gram, int m, i64 max_abs_coord) {
    if (m > KMAX_DIM) return false;
    if (max_abs_coord >= KMAX_COORD) return false;
    for (int i = 0; i < m * m; ++i)
        if (gram[i] >= KMAX_GRAM || gram[i] <= -KMAX_GRAM) return false;
    return true;
}

i64 qform_scalar(const i32* gram, int m, const i32* x) {
    i64 total = 0;
    for (int k = 0; k < m; ++k) {
        const i32* row = gram + static_cast<size_t>(k) * m;
        i64 dot = 0;
        for (int l = 0; l < m; ++l) dot += static_cast<i64>(row[l]) * x[l];
        total += static_cast<i64>(x[k]) * dot;
    }
    return total;
}

i64 bilinear_scalar(const i32* gram, int m, const i32* x, const i32* y) {
    i64 total = 0;
    for (int k = 0; k < m; ++k) {
        const i32* row = gram + static_cast<size_t>(k) * m;
        i64 dot = 0;
        for (int l = 0; l < m; ++l) dot += static_cast<i64>(row[l]) * y[l];
        total += static_cast<i64>(x[k]) * dot;
    }
    return total;
}

void qform_batch_scalar(const i32* gram, int m, const i32* xs, size_t count, i64* out) {
    for (size_t v = 0; v < count; ++v)
        out[v] = qform_scalar(gram, m, xs + v * static_cast<size_t>(m));
}

namespace {

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
    return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(); }

void force_backend(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2 && !__builtin_cpu_supports("avx2")) b = Backend::scalar;
#else
    b = Backend::scalar;
#endif
    g_backend.store(b);
}

std::string backend_name() {
    return active_backend() == Backend::avx2 ? "avx2" : "scalar";
}

i64 qform(const i32* gram, int m, const i32* x) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) return qform_avx2(gram, m, x);
#endif
    return qform_scalar(gram, m, x);
}

i64 bilinear(const i32* gram, int m, const i32* x, const i32* y) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) return bilinear_avx2(gram, m, x, y);
#endif
    return bilinear_scalar(gram, m, x, y);
}

void qform_batch(const i32* gram, int m, const i32* xs, size_t count, i64* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2) {
        qform_batch_avx2(gram, m, xs, count, out);
        return;
    }
#endif
    qform_batch_scalar(gram, m, xs, count, out);
}

void qform_batch_threaded(const i32* gram, int m, const i32* xs, size_t count, i64* out,
                          unsigned threads) {
    if (threads <= 1 || count < 4096) {
        qform_batch(gram, m, xs, count, out);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * chunk;
        if (lo >= count) break;
        size_t n = std::min(chunk, count - lo);
        pool.emplace_back([=] {
            qform_batch(gram, m, xs + lo * static_cast<size_t>(m), n, out + lo);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace golden::kernels
