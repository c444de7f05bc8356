#pragma once

#include <golden/kernels.hpp>
#include <golden/linalg.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace golden {

// Integer Gram matrix of the polar form of a trace lattice: symmetric with
// even diagonal; q(x) = x^T G x / 2.
struct ZGram {
    IMat g;

    ZGram() = default;
    explicit ZGram(IMat m);

    size_t dim() const { return g.rows(); }

    bool is_even() const;
    bool positive_definite() const;
    Int det() const;

    // Coordinates of the dual basis: G^{-1}.
    QMat dual_basis_matrix() const;
};

struct ShortVector {
    std::vector<kernels::i32> x;
    kernels::i64 norm2;  // x^T G x = 2 q(x)
};

// Exact LLL reduction (delta = 99/100) on a Gram matrix; returns the reduced
// Gram and the unimodular transform: reduced = U^T G U.
std::pair<IMat, IMat> lll_reduce_gram(const IMat& g);

// All +-pair representatives of nonzero vectors with x^T G x <= c, by exact
// rational Cholesky descent on an LLL-reduced copy of the form.
// Deterministic order: (norm2, coordinates).
std::vector<ShortVector> enumerate_norm2(const ZGram& t, kernels::i64 c);

// Vectors with q(x) = x^T G x / 2 <= bound, one representative per +- pair.
std::vector<ShortVector> enumerate_short(const ZGram& t, long bound);

// Least norm2 over nonzero vectors (2 * minimum in the q convention).
kernels::i64 minimum_norm2(const ZGram& t);

// norm2 -> number of vectors (counting both signs), for norm2 <= c.
std::map<kernels::i64, kernels::i64> theta_counts(const ZGram& t, kernels::i64 c);

enum class ModularStatus { yes, no, undecided };

struct ModularityCertificate {
    ModularStatus status{ModularStatus::undecided};
    std::optional<IMat> witness;  // U with U^T (p G^{-1}) U = G
    std::string evidence;
};

// Decides whether an integral unimodular U with U^T (p t^{-1}) U = t exists,
// by backtracking over short-vector candidates seeded per basis position.
// Requires p * t^{-1} integral. Exhaustion proves "no"; running past the
// budget yields "undecided" with theta/determinant evidence recorded.
ModularityCertificate modularity_check(const ZGram& t, const Int& p, double budget_seconds = 30.0);

}  // namespace golden
