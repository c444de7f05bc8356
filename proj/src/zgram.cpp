#include <golden/zgram.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>

namespace golden {

using kernels::i32;
using kernels::i64;

ZGram::ZGram(IMat m) : g(std::move(m)) {
    if (g.rows() != g.cols()) throw math_error("Gram matrix must be square");
    if (!g.is_symmetric()) throw math_error("Gram matrix must be symmetric");
}

bool ZGram::is_even() const {
    for (size_t k = 0; k < dim(); ++k)
        if (g.at(k, k) % 2 != 0) return false;
    return true;
}

bool ZGram::positive_definite() const {
    for (const Int& d : principal_minors(g))
        if (d <= 0) return false;
    return true;
}

Int ZGram::det() const { return golden::det(g); }

QMat ZGram::dual_basis_matrix() const { return inverse(g); }

std::pair<IMat, IMat> lll_reduce_gram(const IMat& g) {
    const size_t n = g.rows();
    IMat a = g;
    IMat u = IMat::identity(n);
    if (n <= 1) return {a, u};

    // rational Gram-Schmidt data for the current a
    std::vector<Rat> bstar(n);
    QMat mu = QMat::identity(n);
    auto refresh = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                Rat s = Rat(a.at(i, j));
                for (size_t k = 0; k < j; ++k) s -= mu.at(i, k) * mu.at(j, k) * bstar[k];
                mu.at(i, j) = s / bstar[j];
            }
            Rat s = Rat(a.at(i, i));
            for (size_t k = 0; k < i; ++k) s -= mu.at(i, k) * mu.at(i, k) * bstar[k];
            bstar[i] = s;
            if (bstar[i] <= 0) throw math_error("LLL: form is not positive definite");
        }
    };
    auto translate = [&](size_t k, size_t j, const Int& q) {
        // basis vector k -= q * basis vector j; mu row k follows, bstar unchanged
        for (size_t r = 0; r < n; ++r) {
            a.at(k, r) -= q * a.at(j, r);
        }
        for (size_t r = 0; r < n; ++r) {
            a.at(r, k) -= q * a.at(r, j);
        }
        for (size_t r = 0; r < n; ++r) u.at(r, k) -= q * u.at(r, j);
        Rat qr = Rat(q);
        for (size_t t = 0; t < j; ++t) mu.at(k, t) -= qr * mu.at(j, t);
        mu.at(k, j) -= qr;
    };
    auto swap_vecs = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) std::swap(a.at(i, r), a.at(j, r));
        for (size_t r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (size_t r = 0; r < n; ++r) std::swap(u.at(r, i), u.at(r, j));
    };
    auto round_rat = [](const Rat& q) {
        Rat shifted = q + make_rat(1, 2);
        return rat_floor(shifted);
    };

    const Rat delta = make_rat(99, 100);
    refresh();
    size_t k = 1;
    while (k < n) {
        // size-reduce row k
        for (size_t j = k; j-- > 0;) {
            Int q = round_rat(mu.at(k, j));
            if (q != 0) translate(k, j, q);
        }
        Rat lhs = bstar[k];
        Rat rhs = (delta - mu.at(k, k - 1) * mu.at(k, k - 1)) * bstar[k - 1];
        if (lhs < rhs) {
            swap_vecs(k, k - 1);
            refresh();
            k = k > 1 ? k - 1 : 1;
        } else {
            ++k;
        }
    }
    return {a, u};
}

namespace {

// Exact LDL data scaled to integers: q(x) = sum_i (dnum_i/dden_i) e_i^2 with
// e_i = x_i + (1/uden_i) sum_{j>i} unum_ij x_j.
struct Ldl {
    std::vector<Int> dnum, dden;
    std::vector<Int> uden;
    std::vector<std::vector<Int>> unum;  // row i holds entries for j > i
};

Ldl ldl_decompose(const IMat& g) {
    size_t m = g.rows();
    QMat a = to_rational(g);
    Ldl out;
    out.dnum.resize(m);
    out.dden.resize(m);
    out.uden.resize(m);
    out.unum.assign(m, {});
    for (size_t i = 0; i < m; ++i) {
        Rat di = a.at(i, i);
        if (di <= 0) throw math_error("Gram matrix is not positive definite");
        out.dnum[i] = di.get_num();
        out.dden[i] = di.get_den();
        Int den = 1;
        std::vector<Rat> row(m, Rat(0));
        for (size_t j = i + 1; j < m; ++j) {
            row[j] = a.at(i, j) / di;
            den = lcm(den, row[j].get_den());
        }
        out.uden[i] = den;
        out.unum[i].assign(m, Int(0));
        for (size_t j = i + 1; j < m; ++j) {
            Rat scaled = row[j] * Rat(den);
            out.unum[i][j] = scaled.get_num();
        }
        for (size_t r = i + 1; r < m; ++r)
            for (size_t c = r; c < m; ++c) {
                a.at(r, c) -= a.at(i, r) * a.at(i, c) / di;
                a.at(c, r) = a.at(r, c);
            }
    }
    return out;
}

struct EnumState {
    const Ldl& ldl;
    const IMat* gram;
    long m;
    i64 budget;
    std::vector<i64> x;
    std::vector<Int> xz;  // mirrors x as mpz for allocation-free dot products
    std::vector<ShortVector>* out;
    // int64 fast path for the final norm evaluation
    std::vector<i32> gflat;
    bool flat_ok = false;
};

void emit(EnumState& st) {
    ShortVector sv;
    sv.x.resize(st.m);
    bool in_kernel_range = st.flat_ok;
    for (long r = 0; r < st.m; ++r) {
        if (st.x[r] > INT32_MAX || st.x[r] < INT32_MIN)
            throw math_error("enumeration coordinate overflow");
        sv.x[r] = static_cast<i32>(st.x[r]);
        if (st.x[r] >= kernels::KMAX_COORD || st.x[r] <= -kernels::KMAX_COORD)
            in_kernel_range = false;
    }
    if (in_kernel_range) {
        sv.norm2 = kernels::qform(st.gflat.data(), static_cast<int>(st.m), sv.x.data());
    } else {
        Int total = 0;
        for (long r = 0; r < st.m; ++r) {
            if (st.x[r] == 0) continue;
            Int dot = 0;
            for (long c = 0; c < st.m; ++c)
                if (st.x[c] != 0) dot += st.gram->at(r, c) * st.xz[c];
            total += st.xz[r] * dot;
        }
        sv.norm2 = to_i64(total);
    }
    if (sv.norm2 <= 0 || sv.norm2 > st.budget)
        throw math_error("enumeration produced an out-of-range vector");
    st.out->push_back(std::move(sv));
}

// rem = budget minus the exact contribution of levels > i
void enum_level(EnumState& st, long i, const Rat& rem, bool higher_all_zero) {
    const Int& cden = st.ldl.uden[i];
    Int cnum = 0;  // center * cden
    for (long j = i + 1; j < st.m; ++j)
        if (st.x[j] != 0) {
            // cnum -= unum[i][j] * x[j]
            mpz_submul(cnum.get_mpz_t(), st.ldl.unum[i][j].get_mpz_t(), st.xz[j].get_mpz_t());
        }

    // admissible x_i: dnum*(x*cden - cnum)^2 <= rem * dden * cden^2
    Int rhs_num = rem.get_num() * st.ldl.dden[i] * cden * cden;
    Int rhs_den = rem.get_den() * st.ldl.dnum[i];
    Int wmax2;
    mpz_fdiv_q(wmax2.get_mpz_t(), rhs_num.get_mpz_t(), rhs_den.get_mpz_t());
    if (wmax2 < 0) return;
    Int wmax = sqrt(wmax2);  // floor sqrt; exact bound since W^2 is integral

    Int lo_z, hi_z;
    mpz_cdiv_q(lo_z.get_mpz_t(), Int(cnum - wmax).get_mpz_t(), cden.get_mpz_t());
    mpz_fdiv_q(hi_z.get_mpz_t(), Int(cnum + wmax).get_mpz_t(), cden.get_mpz_t());
    i64 lo = to_i64(lo_z), hi = to_i64(hi_z);
    if (higher_all_zero && lo < 0) lo = 0;

    for (i64 k = lo; k <= hi; ++k) {
        st.x[i] = k;
        bool zero_so_far = higher_all_zero && k == 0;
        if (i == 0) {
            if (zero_so_far) continue;
            st.xz[i] = static_cast<long>(k);
            emit(st);
        } else {
            st.xz[i] = static_cast<long>(k);
            // rem_child = rem - dnum * W^2 / (dden * cden^2), W = k*cden - cnum
            Int w = Int(static_cast<long>(k)) * cden - cnum;
            Rat term = make_rat(st.ldl.dnum[i] * w * w, st.ldl.dden[i] * cden * cden);
            enum_level(st, i - 1, rem - term, zero_so_far);
        }
    }
    st.x[i] = 0;
    st.xz[i] = 0;
}

}  // namespace

std::vector<ShortVector> enumerate_norm2(const ZGram& t, i64 c) {
    std::vector<ShortVector> out;
    long m = static_cast<long>(t.dim());
    if (m == 0 || c <= 0) return out;

    auto [reduced, trans] = lll_reduce_gram(t.g);

    Ldl ldl = ldl_decompose(reduced);
    EnumState st{ldl,
                 &reduced,
                 m,
                 c,
                 std::vector<i64>(m, 0),
                 std::vector<Int>(m, Int(0)),
                 &out,
                 {},
                 false};
    st.gflat.resize(m * m);
    st.flat_ok = true;
    for (long i = 0; i < m && st.flat_ok; ++i)
        for (long j = 0; j < m; ++j) {
            const Int& e = reduced.at(i, j);
            if (!e.fits_sint_p()) {
                st.flat_ok = false;
                break;
            }
            st.gflat[i * m + j] = static_cast<i32>(e.get_si());
        }
    st.flat_ok = st.flat_ok && kernels::fits(st.gflat.data(), static_cast<int>(m),
                                             kernels::KMAX_COORD - 1);
    enum_level(st, m - 1, Rat(static_cast<long>(c)), true);

    // map back to the caller's coordinates and re-canonicalize the signs
    for (ShortVector& sv : out) {
        std::vector<i64> orig(m, 0);
        for (long r = 0; r < m; ++r) {
            if (sv.x[r] == 0) continue;
            for (long row = 0; row < m; ++row)
                orig[row] += to_i64(trans.at(row, r)) * static_cast<i64>(sv.x[r]);
        }
        long last = m - 1;
        while (last >= 0 && orig[last] == 0) --last;
        bool flip = last >= 0 && orig[last] < 0;
        for (long r = 0; r < m; ++r) {
            i64 v = flip ? -orig[r] : orig[r];
            if (v > INT32_MAX || v < INT32_MIN) throw math_error("coordinate overflow in basis map");
            sv.x[r] = static_cast<i32>(v);
        }
    }
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        return a.x < b.x;
    });
    return out;
}

std::vector<ShortVector> enumerate_short(const ZGram& t, long bound) {
    return enumerate_norm2(t, 2 * static_cast<i64>(bound));
}

i64 minimum_norm2(const ZGram& t) {
    if (t.dim() == 0) throw math_error("minimum of rank-0 lattice");
    // the minimum is basis-free: work on the reduced form directly
    ZGram red(lll_reduce_gram(t.g).first);
    i64 mindiag = to_i64(red.g.at(0, 0));
    for (size_t k = 1; k < red.dim(); ++k) mindiag = std::min(mindiag, to_i64(red.g.at(k, k)));
    // grow the search radius; a diagonal entry guarantees termination
    for (i64 bound = 2; bound < mindiag; bound *= 2) {
        auto v = enumerate_norm2(red, bound);
        if (!v.empty()) return v.front().norm2;
    }
    auto v = enumerate_norm2(red, mindiag);
    if (v.empty()) throw math_error("no vector below the diagonal bound; Gram corrupt");
    return v.front().norm2;
}

std::map<i64, i64> theta_counts(const ZGram& t, i64 c) {
    // counts are basis-free as well
    ZGram red(lll_reduce_gram(t.g).first);
    std::map<i64, i64> counts;
    for (const ShortVector& v : enumerate_norm2(red, c)) counts[v.norm2] += 2;
    return counts;
}

namespace {

struct SearchDeadline {
    std::chrono::steady_clock::time_point end;
    size_t ticks = 0;
    bool expired() {
        if ((++ticks & 1023) != 0) return false;
        return std::chrono::steady_clock::now() > end;
    }
};

struct timeout_sentinel {};

// exact x^T G y with a fast path through the runtime-dispatched kernels
i64 bilinear_exact(const IMat& g, const std::vector<i32>& gflat, bool flat_ok, int m,
                   const std::vector<i32>& x, const std::vector<i32>& y) {
    if (flat_ok) return kernels::bilinear(gflat.data(), m, x.data(), y.data());
    Int total = 0;
    for (int k = 0; k < m; ++k) {
        Int dot = 0;
        for (int l = 0; l < m; ++l) dot += g.at(k, l) * Int(y[l]);
        total += Int(x[k]) * dot;
    }
    return to_i64(total);
}

}  // namespace

ModularityCertificate modularity_check(const ZGram& t, const Int& p, double budget_seconds) {
    ModularityCertificate cert;
    size_t m = t.dim();
    QMat rescaled = inverse(t.g);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) rescaled.at(i, j) *= Rat(p);
    if (!is_integral(rescaled))
        throw math_error("modularity_check: p * t^{-1} is not integral");
    ZGram s(to_integer(rescaled));

    if (s.det() != t.det()) {
        cert.status = ModularStatus::no;
        cert.evidence = "determinant of p*t^{-1} differs from det(t)";
        return cert;
    }

    i64 maxdiag = 0;
    for (size_t k = 0; k < m; ++k) maxdiag = std::max(maxdiag, to_i64(t.g.at(k, k)));
    auto counts_t = theta_counts(t, maxdiag);
    auto counts_s = theta_counts(s, maxdiag);
    if (counts_t != counts_s) {
        cert.status = ModularStatus::no;
        cert.evidence = "vector counts disagree below norm2 " + std::to_string(maxdiag);
        return cert;
    }

    // candidate images per basis vector: +-v with v^T S v = t_kk
    std::vector<ShortVector> shorts = enumerate_norm2(s, maxdiag);
    std::vector<std::vector<std::vector<i32>>> cand(m);
    for (size_t k = 0; k < m; ++k) {
        i64 want = to_i64(t.g.at(k, k));
        for (const ShortVector& v : shorts) {
            if (v.norm2 != want) continue;
            cand[k].push_back(v.x);
            std::vector<i32> neg(v.x.size());
            for (size_t r = 0; r < v.x.size(); ++r) neg[r] = -v.x[r];
            cand[k].push_back(std::move(neg));
        }
    }

    // fill scarcest positions first
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return cand[a].size() < cand[b].size(); });

    std::vector<i32> sflat(m * m);
    bool flat_ok = true;
    i64 max_coord = 0;
    for (const auto& lists : cand)
        for (const auto& v : lists)
            for (i32 coord : v) max_coord = std::max<i64>(max_coord, std::abs((long)coord));
    for (size_t i = 0; i < m && flat_ok; ++i)
        for (size_t j = 0; j < m; ++j) {
            Int e = s.g.at(i, j);
            if (!e.fits_sint_p()) { flat_ok = false; break; }
            sflat[i * m + j] = static_cast<i32>(e.get_si());
        }
    flat_ok = flat_ok && kernels::fits(sflat.data(), static_cast<int>(m), max_coord);

    std::vector<const std::vector<i32>*> chosen(m, nullptr);
    SearchDeadline deadline{std::chrono::steady_clock::now() +
                            std::chrono::microseconds(static_cast<long long>(budget_seconds * 1e6))};

    auto compatible = [&](size_t pos_idx, const std::vector<i32>& v) {
        size_t k = order[pos_idx];
        for (size_t prev = 0; prev < pos_idx; ++prev) {
            size_t l = order[prev];
            i64 want = to_i64(t.g.at(k, l));
            if (bilinear_exact(s.g, sflat, flat_ok, static_cast<int>(m), v, *chosen[l]) != want)
                return false;
        }
        return true;
    };

    bool found = false;
    std::vector<size_t> pick(m, 0);
    auto backtrack = [&](auto&& self, size_t pos_idx) -> bool {
        if (deadline.expired()) throw timeout_sentinel{};
        if (pos_idx == m) return true;
        size_t k = order[pos_idx];
        for (size_t ci = 0; ci < cand[k].size(); ++ci) {
            // the global sign flip is a symmetry: fix the first column's sign
            if (pos_idx == 0 && ci % 2 == 1) continue;
            if (!compatible(pos_idx, cand[k][ci])) continue;
            chosen[k] = &cand[k][ci];
            if (self(self, pos_idx + 1)) return true;
            chosen[k] = nullptr;
        }
        return false;
    };

    try {
        found = backtrack(backtrack, 0);
    } catch (const timeout_sentinel&) {
        cert.status = ModularStatus::undecided;
        cert.evidence = "search budget exhausted; vector counts agree below norm2 " +
                        std::to_string(maxdiag) + " and det(p t^{-1}) = det t";
        return cert;
    }

    if (!found) {
        cert.status = ModularStatus::no;
        cert.evidence = "backtracking search exhausted without an isometry";
        return cert;
    }

    IMat u(m, m);
    for (size_t k = 0; k < m; ++k)
        for (size_t r = 0; r < m; ++r) u.at(r, k) = Int((*chosen[k])[r]);
    IMat check = u.transpose() * s.g * u;
    if (!(check == t.g)) throw math_error("isometry witness failed verification");
    Int du = det(u);
    if (du != 1 && du != -1) throw math_error("isometry witness is not unimodular");
    cert.status = ModularStatus::yes;
    cert.witness = u;
    cert.evidence = "explicit unimodular U with U^T (p t^{-1}) U = t";
    return cert;
}

}  // namespace golden
