#pragma once

#include <golden/hmf.hpp>
#include <golden/zgram.hpp>

#include <optional>

namespace golden {

using RMat = Mat<RElem>;

// Gram matrix B(b_k, b_l) over R of an R-lattice (Lambda, Q), Q(x) = B(x,x)/2.
struct RGram {
    RMat g;

    RGram() = default;
    explicit RGram(RMat m);

    size_t rank() const { return g.rows(); }
};

RElem rdet(const RMat& m);

// Column-operation Hermite reduction over the norm-Euclidean ring R: returns
// the n x n lower triangular basis of the column span of an n x m full-rank
// matrix. Pivots are canonical associates; column choice by minimal |norm|.
RMat hermite_reduce_columns(RMat w);

// diagonal in 2R and det a unit of R
bool is_even_unimodular(const RGram& g);

// positive definite under both embeddings (exact Sylvester tests)
bool is_totally_positive_definite(const RGram& g);

// 2n x 2n integer Gram with blocks Tr(alpha theta^{s+t} g_kl) on the Z-basis
// (b_1..b_n, theta b_1..theta b_n). alpha must be totally positive and the
// traces integral.
ZGram trace_gram(const RGram& g, const KElem& alpha);

// theta * x and conj(theta) * x on trace coordinates
IMat theta_action(size_t n);
IMat theta_bar_action(size_t n);

// B(x, y) over R for trace-coordinate vectors (c_k = x_k + theta x_{n+k})
RElem r_bilinear(const RGram& g, const std::vector<Int>& x, const std::vector<Int>& y);
// Q(x) = B(x,x)/2 over R
RElem r_quadratic(const RGram& g, const std::vector<Int>& x);

// Theta coefficients are a q-expansion with non-negative integer entries and
// constant term 1, counting vectors by the index pair of their Q-value.
using ThetaCoeffs = QExp;

// Enumerates L_{eta^-1} up to q-value prec and bins vectors by Q(lambda).
ThetaCoeffs hilbert_theta(const RGram& g, long prec, unsigned threads = 1);

struct GoldenCheckReport {
    bool golden{false};
    long min_eta{0};             // min of L_{eta^-1}, q convention
    long min_one{0};             // min of L_1
    long extremal_bound{0};      // 1 + floor(N/24), N = 2n
    bool meets_extremal_bound{false};
    std::string detail;
};

// True iff the Hilbert theta series equals the extremal form of weight n/2.
GoldenCheckReport golden_check(const RGram& g, long prec);

struct GoldenStructure {
    RGram gram;
    std::optional<IMat> z_source;  // order-5 isometry the structure came from
    IMat basis_change;             // columns (lambda_1..lambda_n, T lambda_1..)
};

// Extracts the R-structure of an even unimodular Z-lattice t from a symmetric
// endomorphism T with T^2 + T = 1, by Hermite reduction over the Euclidean
// ring R. trace_gram(result, eta^-1) is integrally equivalent to t via
// basis_change (verified). A source isometry z may be recorded; it must
// satisfy z^5 = 1 and T = z + z^4.
GoldenStructure goldenex(const ZGram& t, const IMat& T,
                         std::optional<IMat> z_source = std::nullopt);

// Q(sigma lambda) = conj(theta^2 Q(lambda)) on a basis and pairwise sums;
// sigma acts on trace coordinates and must be an isometry of L_{eta^-1}.
bool galois_check(const RGram& g, const IMat& sigma);

struct FamilyCertificate {
    long a{0};
    Int p;                  // a^2 + 5a + 5
    Int determinant;        // must equal p^n
    bool det_ok{false};
    kernels::i64 min_q{0};  // exact minimum, q convention
    kernels::i64 min_bound{0};  // t + a s from the golden theta valuation
    bool min_ok{false};
    kernels::i64 kissing{0};
    ModularityCertificate modularity;
    ZGram lattice;
};

// The trace lattice L_{1 + a eta^-1}: an (a^2+5a+5)-modular lattice of
// minimum >= t + a s.
FamilyCertificate modular_family(const RGram& g, long a, double budget_seconds = 30.0);

// q_1(v) = q_eta(v) + q_eta(theta_bar v) and 5 q_eta(v) = q_1(v) + q_1(theta v),
// exactly, for every sample vector (trace coordinates).
bool trace_identity_check(const RGram& g, const std::vector<std::vector<Int>>& samples);
// same, sampled on the basis plus all vectors of L_{eta^-1} up to q <= 2
bool trace_identity_check(const RGram& g);

RGram orthogonal_sum(const RGram& g1, const RGram& g2);

}  // namespace golden
