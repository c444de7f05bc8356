#pragma once

#include <golden/qexp.hpp>

#include <array>
#include <string>
#include <vector>

namespace golden {

// E4 = 1 + 240 sum sigma_3(n) q^n, coefficients through q^prec.
std::vector<Rat> elliptic_e4(long prec);

// Delta = q prod (1-q^n)^24, coefficients through q^prec.
std::vector<Rat> elliptic_delta(long prec);

// Hilbert Eisenstein series of weight k in {2,6,10}:
// 1 + kappa_k sum_{X totally positive} sigma_{k-1}((X)) q^X, kappa_k = 4/zeta_K(1-k).
QExp eisenstein(unsigned k, long prec);

// Generators of the graded ring of symmetric Hilbert modular forms.
// A2 is the weight-2 Eisenstein series; B6 is normalized so that B6(q0,1) = Delta;
// C10 restricts to 0 and is scaled so that nu(A2*C10 - B6^2) > (2,4).
struct GeneratorSet {
    QExp A2;
    QExp B6;
    QExp C10;
    long prec;
};

const GeneratorSet& generators(long prec);

struct Monomial {
    unsigned a, b, c;  // A2^a B6^b C10^c, weight 2a+6b+10c
};

std::vector<Monomial> monomial_exponents(unsigned w);
std::vector<QExp> monomial_basis(unsigned w, long prec);

enum class PmClass { plus, minus, other };

struct ExtremalResult {
    unsigned weight{0};
    QExp form{0};
    long s{0}, t{0};       // nu(form - 1)
    Rat s_eta;             // row sum at i = s (kissing number of L_{eta^-1})
    Rat s_one;             // column sum at j = t (kissing number of L_1)
    PmClass pm{PmClass::other};
    Rat pm_ratio;          // s_one / coeff(s,t), recorded when pm == other
    bool unique{false};

    std::string pm_str() const;
};

// The form with constant term 1 maximizing nu(f-1) lexicographically, found by
// greedy elimination over index rows in lex order. Throws precision_error when
// the expansion window cannot pin a single solution.
ExtremalResult extremal_form(unsigned w, long prec);

// s' <= 1 + floor(w/6) and 2s' <= t' <= floor(5s'/2).
bool check_nu_bound(const ExtremalResult& r);

struct TableRow {
    unsigned weight;
    long s, t;
    Int s_eta;
    Int s_one;
    char pm;  // '+' or '-'
};

// The twelve expected rows (weights 2..30), the reference for reproduction.
const std::array<TableRow, 12>& expected_table();

struct TableDiff {
    ExtremalResult computed;
    TableRow expected;
    std::vector<std::string> mismatches;  // empty when the row matches
};

// Recomputes every row and diffs cell by cell against the embedded values.
std::vector<TableDiff> table_reproduce(long prec, unsigned threads = 1);

}  // namespace golden
