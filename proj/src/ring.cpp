#include <golden/ring.hpp>

#include <algorithm>
#include <map>
#include <ostream>

namespace golden {

std::ostream& operator<<(std::ostream& os, const RElem& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const KElem& x) { return os << x.str(); }

std::vector<Rat> bernoulli_numbers(unsigned long n) {
    std::vector<Rat> B;
    B.reserve(n + 1);
    B.emplace_back(1);
    if (n >= 1) B.push_back(make_rat(-1, 2));
    for (unsigned long i = 2; i <= n; ++i) {
        // sum_{k<i} C(i+1,k) B_k = 0
        Rat s = 0;
        for (unsigned long k = 0; k < i; ++k) s += Rat(binomial(i + 1, k)) * B[k];
        B.push_back(-s / Rat(Int(i) + 1));
    }
    return B;
}

Rat bernoulli_poly(unsigned long k, const Rat& x) {
    static std::vector<Rat> cache = bernoulli_numbers(16);
    if (k >= cache.size()) cache = bernoulli_numbers(std::max<unsigned long>(k, 2 * cache.size()));
    Rat r = 0;
    Rat xp = 1;
    for (unsigned long i = 0; i <= k; ++i) {
        r += Rat(binomial(k, i)) * cache[k - i] * xp;
        xp *= x;
    }
    return r;
}

// sign of u + v*sqrt(5) with u, v rational
static int sign_quad(const Rat& u, const Rat& v) {
    int su = sgn(u), sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 against 5 v^2
    Rat d = u * u - 5 * v * v;
    int sd = sgn(d);
    if (sd == 0) throw math_error("sqrt5 is irrational; unreachable");
    return sd > 0 ? su : sv;
}

int sign_sigma1(const KElem& x) {
    // a + b(-1+sqrt5)/2 = (2a-b)/2 + (b/2) sqrt5
    return sign_quad(x.trace() / 2, x.b / 2);
}

int sign_sigma2(const KElem& x) {
    return sign_quad(x.trace() / 2, -x.b / 2);
}

bool is_totally_positive(const KElem& x) {
    return x.trace() > 0 && x.norm() > 0;
}

std::pair<RElem, RElem> euclid_divmod(const RElem& x, const RElem& y) {
    if (y.is_zero()) throw math_error("division by zero in R");
    // exact quotient x * conj(y) / N(y) in K
    Int ny = y.norm();
    RElem num = x * y.conj();
    Rat qa = make_rat(num.a, ny);
    Rat qb = make_rat(num.b, ny);
    Int best_norm;
    std::optional<std::pair<RElem, RElem>> best;
    for (Int fa : {rat_floor(qa), rat_ceil(qa)}) {
        for (Int fb : {rat_floor(qb), rat_ceil(qb)}) {
            RElem q{fa, fb};
            RElem r = x - q * y;
            Int nr = abs(r.norm());
            if (!best || nr < best_norm) {
                best_norm = nr;
                best = {q, r};
            }
        }
    }
    if (best_norm >= abs(ny)) throw math_error("Euclidean division failed to reduce norm");
    return *best;
}

RElem exact_div(const RElem& x, const RElem& y) {
    auto [q, r] = euclid_divmod(x, y);
    if (!r.is_zero()) throw math_error("exact_div: not divisible");
    return q;
}

bool divides(const RElem& y, const RElem& x) {
    if (y.is_zero()) return x.is_zero();
    return euclid_divmod(x, y).second.is_zero();
}

RElem gcd(RElem x, RElem y) {
    while (!y.is_zero()) {
        RElem r = euclid_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x;
}

bool is_unit(const RElem& x) { return abs(x.norm()) == 1; }

RElem canonical_associate(const RElem& x) {
    if (x.is_zero()) throw math_error("canonical associate of zero");
    RElem y = x;
    if (y.norm() < 0) y = y * theta();  // N(theta) = -1
    if (y.trace() < 0) y = -y;          // now totally positive
    // scale by theta^{+-2} until sigma1(y) in [1, phi^2)
    while (sign_sigma1(KElem(y) - KElem(1)) < 0) {
        y = y * phi_sq();  // theta^{-2}
    }
    // sigma1(y) >= phi^2  <=>  sigma1(y * theta^2) >= 1
    while (sign_sigma1(KElem(y * theta_sq()) - KElem(1)) >= 0) {
        y = y * theta_sq();
    }
    return y;
}

RElem IdealFactorization::recompose() const {
    RElem r = unit;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

// smallest t in [0, p/2] with t^2 = 5 mod p (p splits, so it exists)
static Int sqrt5_mod(const Int& p) {
    for (Int t = 0; t <= p / 2; ++t) {
        if ((t * t - 5) % p == 0) return t;
    }
    throw math_error("no square root of 5 mod " + p.get_str());
}

IdealFactorization factor(const RElem& x) {
    if (x.is_zero()) throw math_error("factor(0)");
    IdealFactorization f;
    RElem rest = x;
    Int n = abs(x.norm());
    std::map<Int, int> rational;  // prime -> exponent in N(x)
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++rational[p];
            n /= p;
        }
    }
    if (n > 1) ++rational[n];

    for (const auto& entry : rational) {
        const Int& p = entry.first;
        std::vector<RElem> primes;
        unsigned long pm5 = mpz_fdiv_ui(p.get_mpz_t(), 5);
        if (p == 5) {
            primes.push_back(canonical_associate(sqrt5()));
        } else if (pm5 == 1 || pm5 == 4) {
            Int t = sqrt5_mod(p);
            RElem pi = gcd(RElem{p, 0}, RElem{t - 1, -2});  // t - sqrt5
            pi = canonical_associate(pi);
            primes.push_back(pi);
            primes.push_back(canonical_associate(pi.conj()));
        } else {
            primes.push_back(canonical_associate(RElem{p, 0}));
        }
        for (const RElem& pi : primes) {
            int k = 0;
            while (divides(pi, rest)) {
                rest = exact_div(rest, pi);
                ++k;
            }
            if (k > 0) f.factors.push_back({pi, k});
        }
    }
    if (!is_unit(rest)) throw math_error("factorization left a non-unit cofactor");
    f.unit = rest;
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& u, const auto& v) {
        Int nu = u.first.norm(), nv = v.first.norm();
        if (nu != nv) return nu < nv;
        if (u.first.a != v.first.a) return u.first.a < v.first.a;
        return u.first.b < v.first.b;
    });
    return f;
}

Int divisor_sigma(const RElem& x, unsigned k) {
    IdealFactorization f = factor(x);
    Int result = 1;
    for (const auto& [p, e] : f.factors) {
        Int np = p.norm();  // canonical primes are totally positive
        Int npk = ipow(np, k);
        Int geom = 1, term = 1;
        for (int i = 0; i < e; ++i) {
            term *= npk;
            geom += term;
        }
        result *= geom;
    }
    return result;
}

Rat bernoulli_chi5(unsigned long k) {
    // chi5(a) for a = 1..5: quadratic residues mod 5 are {1,4}
    static const int chi[5] = {1, -1, -1, 1, 0};
    Rat s = 0;
    for (unsigned long a = 1; a <= 5; ++a) {
        if (chi[a - 1] == 0) continue;
        s += Rat(chi[a - 1]) * bernoulli_poly(k, make_rat(Int(a), 5));
    }
    return Rat(ipow(5, k - 1)) * s;
}

Rat zeta_K_at_negative(unsigned k) {
    if (k < 2 || k % 2 != 0) throw math_error("zeta_K_at_negative: k must be even and >= 2");
    std::vector<Rat> B = bernoulli_numbers(k);
    Rat zeta_val = -B[k] / Rat(Int(k));              // zeta(1-k)
    Rat l_val = -bernoulli_chi5(k) / Rat(Int(k));    // L(1-k, chi5)
    return zeta_val * l_val;
}

RElem index_to_element(long i, long j) {
    RElem x{Int(j - i), Int(j - 2 * i)};
    if (x.is_zero()) {
        if (i != 0 || j != 0) throw math_error("index maps to zero but is not (0,0)");
        return x;
    }
    if (!is_totally_positive(x))
        throw math_error("index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not realizable by a totally positive element");
    return x;
}

std::pair<long, long> element_to_index(const RElem& x) {
    Int i = x.a - x.b;          // Tr(eta^-1 X)
    Int j = 2 * x.a - x.b;      // Tr(X)
    return {to_i64(i), to_i64(j)};
}

bool is_valid_index(long i, long j) {
    if (i == 0 && j == 0) return true;
    RElem x{Int(j - i), Int(j - 2 * i)};
    return !x.is_zero() && is_totally_positive(x);
}

std::vector<long> valid_js(long i) {
    std::vector<long> out;
    if (i == 0) return {0};
    if (i < 0) return out;
    // total positivity bounds j strictly between ~1.382 i and ~3.618 i
    for (long j = i; j <= 4 * i; ++j)
        if (is_valid_index(i, j)) out.push_back(j);
    return out;
}

}  // namespace golden
