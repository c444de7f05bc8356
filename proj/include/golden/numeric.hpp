#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

using Int = mpz_class;
using Rat = mpq_class;

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation cannot be completed at the requested expansion
// precision (or within a resource budget) rather than being mathematically wrong.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw math_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat qpow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw math_error("integer out of int64 range: " + v.get_str());
    return static_cast<int64_t>(v.get_si());
}

// B_0, ..., B_n with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(unsigned long n);

// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned long k, const Rat& x);

}  // namespace golden
