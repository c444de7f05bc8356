#include <golden/linalg.hpp>

namespace golden {

static Int div_exact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int det(const IMat& m) {
    return bareiss_det(m, [](const Int& a, const Int& b) { return div_exact(a, b); });
}

std::vector<Int> principal_minors(const IMat& m) {
    return principal_minors_ff(m, [](const Int& a, const Int& b) { return div_exact(a, b); });
}

QMat to_rational(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw math_error("inverse of non-square matrix");
    size_t n = m.rows();
    QMat a = m;
    QMat inv = QMat::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) throw math_error("singular matrix");
        if (p != k) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        }
        Rat piv = a.at(k, k);
        for (size_t j = 0; j < n; ++j) {
            a.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = a.at(i, k);
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

QMat inverse(const IMat& m) { return inverse(to_rational(m)); }

std::vector<Rat> solve(const QMat& a, std::vector<Rat> b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) throw math_error("solve shape mismatch");
    size_t n = a.rows();
    QMat w = a;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) throw math_error("singular system");
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            std::swap(b[k], b[p]);
        }
        Rat piv = w.at(k, k);
        for (size_t j = k; j < n; ++j) w.at(k, j) /= piv;
        b[k] /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = w.at(i, k);
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            b[i] -= f * b[k];
        }
    }
    return b;
}

bool is_integral(const QMat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m.at(i, j))) return false;
    return true;
}

IMat to_integer(const QMat& m) {
    IMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m.at(i, j))) throw math_error("matrix entry is not an integer");
            r.at(i, j) = m.at(i, j).get_num();
        }
    return r;
}

namespace {

// basis of {v in Z^n : M v = 0 mod p} for prime p: lifted F_p kernel vectors
// plus p * e_j for the pivot columns
IMat mod_p_kernel_basis(const IMat& m, long p) {
    size_t k = m.rows(), n = m.cols();
    std::vector<std::vector<long>> a(k, std::vector<long>(n));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), m.at(i, j).get_mpz_t(), p);
            a[i][j] = r.get_si();
        }
    auto inv_mod = [&](long x) {
        long r = 1, b = x % p, e = p - 2;  // Fermat
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<size_t> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    size_t row = 0;
    for (size_t col = 0; col < n && row < k; ++col) {
        size_t pr = row;
        while (pr < k && a[pr][col] == 0) ++pr;
        if (pr == k) continue;
        std::swap(a[pr], a[row]);
        long inv = inv_mod(a[row][col]);
        for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv % p;
        for (size_t i = 0; i < k; ++i) {
            if (i == row || a[i][col] == 0) continue;
            long f = a[i][col];
            for (size_t j = col; j < n; ++j)
                a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
        }
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    IMat basis(n, n);
    size_t out = 0;
    for (size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        // free column: kernel vector with -coefficients at the pivots
        basis.at(col, out) = 1;
        for (size_t r = 0; r < pivot_of_row.size(); ++r)
            basis.at(pivot_of_row[r], out) = Int((p - a[r][col]) % p);
        ++out;
    }
    for (size_t col = 0; col < n; ++col)
        if (is_pivot[col]) basis.at(col, out++) = p;
    return basis;
}

IMat preimage_recursive(const IMat& m, const Int& den) {
    size_t n = m.cols();
    if (den == 1) return IMat::identity(n);
    long p = 2;
    while (den % p != 0) ++p;
    if (p > (1 << 20)) throw math_error("integral_preimage_basis: prime factor too large");
    IMat b1 = mod_p_kernel_basis(m, p);
    // every column of m*b1 is divisible by p; recurse on the quotient
    IMat m2 = m * b1;
    for (size_t i = 0; i < m2.rows(); ++i)
        for (size_t j = 0; j < m2.cols(); ++j) {
            Int q;
            mpz_divexact_ui(q.get_mpz_t(), m2.at(i, j).get_mpz_t(), p);
            m2.at(i, j) = q;
        }
    return b1 * preimage_recursive(m2, den / p);
}

}  // namespace

IMat integral_preimage_basis(const QMat& d) {
    size_t k = d.rows(), n = d.cols();
    Int den = 1;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) den = lcm(den, Int(d.at(i, j).get_den()));
    IMat m(k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = d.at(i, j) * Rat(den);
            m.at(i, j) = v.get_num();
        }
    return preimage_recursive(m, den);
}

}  // namespace golden
