#pragma once

#include <golden/relem.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace golden {

// Exact sign of x under the embedding sending theta to (-1+sqrt5)/2 (sigma_1)
// or to (-1-sqrt5)/2 (sigma_2). Returns -1, 0, or +1.
int sign_sigma1(const KElem& x);
int sign_sigma2(const KElem& x);
inline int sign_sigma1(const RElem& x) { return sign_sigma1(KElem(x)); }
inline int sign_sigma2(const RElem& x) { return sign_sigma2(KElem(x)); }

// Positive under both embeddings; exactly (trace > 0 and norm > 0).
bool is_totally_positive(const KElem& x);
inline bool is_totally_positive(const RElem& x) { return is_totally_positive(KElem(x)); }

// x = q*y + r with |N(r)| < |N(y)|; R is norm-Euclidean, the quotient is one of
// the four integer roundings of the exact quotient in K.
std::pair<RElem, RElem> euclid_divmod(const RElem& x, const RElem& y);

// Exact division; throws if y does not divide x.
RElem exact_div(const RElem& x, const RElem& y);

bool divides(const RElem& y, const RElem& x);

// gcd up to units, via the Euclidean chain; gcd(0,0) = 0.
RElem gcd(RElem x, RElem y);

bool is_unit(const RElem& x);

// The unique associate x*(+-theta)^k that is totally positive with
// sigma_1 in [1, sigma_1(theta^-2)). Makes factorizations and indices stable.
RElem canonical_associate(const RElem& x);

struct IdealFactorization {
    RElem unit;                                   // |N(unit)| = 1
    std::vector<std::pair<RElem, int>> factors;   // (canonical prime, exponent)

    RElem recompose() const;
};

// Factor x != 0 into a unit times canonical prime powers. Rational primes
// split/stay inert/ramify according to p mod 5 (+-1 split, +-2 inert, 5 ramified).
IdealFactorization factor(const RElem& x);

// Sum over ideal divisors b | (x) of N(b)^k; depends only on the ideal (x).
Int divisor_sigma(const RElem& x, unsigned k);

// Generalized Bernoulli number B_{k,chi5} for the quadratic character mod 5.
Rat bernoulli_chi5(unsigned long k);

// zeta_K(1-k) for K = Q(sqrt5), via zeta(1-k) * L(1-k, chi5); k even, k >= 2.
Rat zeta_K_at_negative(unsigned k);

// (i,j) = (Tr(eta^-1 X), Tr(X)) <-> X = (j-i) + (j-2i)*theta.
// index_to_element throws unless the pair is (0,0) or totally positive.
RElem index_to_element(long i, long j);
std::pair<long, long> element_to_index(const RElem& x);

// True iff (i,j) = (0,0) or the corresponding X is totally positive.
bool is_valid_index(long i, long j);

// All j with (i,j) valid, ascending. For i >= 1 these are the integers
// strictly between the two real embeddings' linear bounds (~2.24*i of them).
std::vector<long> valid_js(long i);

}  // namespace golden
