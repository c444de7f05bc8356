#pragma once

#include <golden/ring.hpp>

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace golden {

// Exponent pair (i,j) = (Tr(eta^-1 X), Tr(X)) of a (q0,q1)-expansion,
// ordered lexicographically.
struct IndexPair {
    long i{0};
    long j{0};

    auto operator<=>(const IndexPair&) const = default;
};

std::ostream& operator<<(std::ostream& os, const IndexPair& p);

// Truncated bivariate expansion: exact coefficients for every valid index with
// i <= prec. Indices are the constant (0,0) or pairs whose element is totally
// positive; for fixed i only finitely many j occur.
class QExp {
  public:
    explicit QExp(long prec) : prec_(prec) {
        if (prec < 0) throw math_error("QExp precision must be >= 0");
    }

    long prec() const { return prec_; }

    const std::map<IndexPair, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(long i, long j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    // Sets a coefficient; rejects invalid or out-of-precision indices.
    void set(long i, long j, Rat v);
    void add(long i, long j, const Rat& v);

    bool operator==(const QExp& o) const;

    QExp operator+(const QExp& o) const;
    QExp operator-(const QExp& o) const;
    QExp operator*(const QExp& o) const;
    QExp operator*(const Rat& c) const;
    QExp pow(unsigned e) const;

    // Lexicographically least index with nonzero coefficient, or nullopt when
    // the expansion is zero within precision.
    std::optional<IndexPair> nu() const;

    // nu(f - constant term); the usual valuation of f-1 when f has constant 1.
    std::optional<IndexPair> nu_minus_constant() const;

    // q1 -> 1: coefficient of q0^i is the row sum over j. Exact for i <= prec.
    std::vector<Rat> restrict_q1() const;

    // q0 -> 1: column sums. Returns sums for every j that is complete within
    // precision (all valid (i,j) have i <= prec).
    std::map<long, Rat> restrict_q0() const;

    // Row sum at a fixed i (sum over all valid j).
    Rat row_sum(long i) const;

    // Column sum at fixed j, using the symmetry A(i,j) = A(j-i,j) to fill
    // indices beyond precision. Throws if a needed partner is also out of reach.
    Rat column_sum_symmetric(long j) const;

    // A(i,j) = A(j-i, j) for all stored indices.
    bool check_symmetric() const;

    // A(i,j) = A(4i-j, 5i-j) whenever both indices lie within precision;
    // the index map realizes X -> theta^2 X.
    bool check_unit_invariant() const;

    // Copy with a smaller precision window.
    QExp truncated(long prec) const;

    // Text dump: precision header then "i j num/den" rows in lex order.
    std::string dump() const;
    static QExp parse(const std::string& text);

    static QExp one(long prec) {
        QExp f(prec);
        f.set(0, 0, 1);
        return f;
    }

  private:
    long prec_;
    std::map<IndexPair, Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QExp& f);

}  // namespace golden
