#include <doctest.h>

#include <golden/kernels.hpp>
#include <golden/numeric.hpp>

#include <random>

using namespace golden;
using kernels::i32;
using kernels::i64;

namespace {

// independent arbitrary-precision oracle
i64 qform_mpz(const std::vector<i32>& g, int m, const std::vector<i32>& x) {
    Int total = 0;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) total += Int(g[k * m + l]) * Int(x[k]) * Int(x[l]);
    return to_i64(total);
}

i64 bilinear_mpz(const std::vector<i32>& g, int m, const std::vector<i32>& x,
                 const std::vector<i32>& y) {
    Int total = 0;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) total += Int(g[k * m + l]) * Int(x[k]) * Int(y[l]);
    return to_i64(total);
}

std::vector<i32> random_sym(std::mt19937& rng, int m, i32 span) {
    std::uniform_int_distribution<i32> d(-span, span);
    std::vector<i32> g(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) g[i * m + j] = g[j * m + i] = d(rng);
    return g;
}

std::vector<i32> random_vec(std::mt19937& rng, int m, i32 span) {
    std::uniform_int_distribution<i32> d(-span, span);
    std::vector<i32> x(m);
    for (auto& v : x) v = d(rng);
    return x;
}

}  // namespace

TEST_CASE("scalar kernel matches the arbitrary-precision oracle") {
    std::mt19937 rng(61);
    for (int it = 0; it < 200; ++it) {
        int m = 1 + static_cast<int>(rng() % 48);
        auto g = random_sym(rng, m, 1000);
        auto x = random_vec(rng, m, 500);
        auto y = random_vec(rng, m, 500);
        CHECK(kernels::qform_scalar(g.data(), m, x.data()) == qform_mpz(g, m, x));
        CHECK(kernels::bilinear_scalar(g.data(), m, x.data(), y.data()) == bilinear_mpz(g, m, x, y));
    }
}

TEST_CASE("simd variant is equivalent to the scalar reference") {
    if (kernels::active_backend() != kernels::Backend::avx2) {
        MESSAGE("avx2 unavailable; dispatch stays on scalar");
        return;
    }
    std::mt19937 rng(67);
    for (int it = 0; it < 500; ++it) {
        int m = 1 + static_cast<int>(rng() % 48);
        auto g = random_sym(rng, m, kernels::KMAX_GRAM - 1);
        auto x = random_vec(rng, m, kernels::KMAX_COORD - 1);
        auto y = random_vec(rng, m, kernels::KMAX_COORD - 1);
        REQUIRE(kernels::fits(g.data(), m, kernels::KMAX_COORD - 1));
        CHECK(kernels::qform_avx2(g.data(), m, x.data()) ==
              kernels::qform_scalar(g.data(), m, x.data()));
        CHECK(kernels::bilinear_avx2(g.data(), m, x.data(), y.data()) ==
              kernels::bilinear_scalar(g.data(), m, x.data(), y.data()));
    }
}

TEST_CASE("batch evaluation is order-preserving and backend-independent") {
    std::mt19937 rng(71);
    int m = 24;
    size_t count = 5000;
    auto g = random_sym(rng, m, 200);
    std::vector<i32> xs(count * m);
    for (auto& v : xs) v = static_cast<i32>(rng() % 41) - 20;

    std::vector<i64> out_scalar(count), out_active(count), out_threaded(count);
    kernels::qform_batch_scalar(g.data(), m, xs.data(), count, out_scalar.data());
    kernels::qform_batch(g.data(), m, xs.data(), count, out_active.data());
    kernels::qform_batch_threaded(g.data(), m, xs.data(), count, out_threaded.data(), 4);
    CHECK(out_scalar == out_active);
    CHECK(out_scalar == out_threaded);
}

TEST_CASE("force_backend hook") {
    auto saved = kernels::active_backend();
    kernels::force_backend(kernels::Backend::scalar);
    CHECK(kernels::backend_name() == "scalar");
    kernels::force_backend(saved);
}

TEST_CASE("range guard") {
    std::vector<i32> g = {2, 1, 1, 2};
    CHECK(kernels::fits(g.data(), 2, 10));
    std::vector<i32> big = {1 << 20, 0, 0, 1};
    CHECK_FALSE(kernels::fits(big.data(), 2, 10));
    CHECK_FALSE(kernels::fits(g.data(), 2, kernels::KMAX_COORD));
}
