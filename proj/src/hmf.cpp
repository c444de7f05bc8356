#include <golden/hmf.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace golden {

std::vector<Rat> elliptic_e4(long prec) {
    std::vector<Rat> e(prec + 1, Rat(0));
    e[0] = 1;
    for (long n = 1; n <= prec; ++n) {
        Int s3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s3 += ipow(Int(d), 3);
        e[n] = Rat(240 * s3);
    }
    return e;
}

std::vector<Rat> elliptic_delta(long prec) {
    // q * prod_{n>=1} (1 - q^n)^24
    long m = std::max<long>(prec, 1);  // product needed through q^(prec-1)
    std::vector<Int> p(m, 0);
    p[0] = 1;
    for (long n = 1; n < m; ++n) {
        // multiply by (1 - q^n)
        for (long k = m - 1; k >= n; --k) p[k] -= p[k - n];
    }
    std::vector<Int> pw(m, 0);
    pw[0] = 1;
    for (int rep = 0; rep < 24; ++rep) {
        std::vector<Int> nx(m, 0);
        for (long a = 0; a < m; ++a) {
            if (pw[a] == 0) continue;
            for (long b = 0; a + b < m; ++b) {
                if (p[b] == 0) continue;
                nx[a + b] += pw[a] * p[b];
            }
        }
        pw.swap(nx);
    }
    std::vector<Rat> d(prec + 1, Rat(0));
    for (long n = 1; n <= prec; ++n) d[n] = Rat(pw[n - 1]);
    return d;
}

QExp eisenstein(unsigned k, long prec) {
    if (k != 2 && k != 6 && k != 10) throw math_error("eisenstein: weight must be 2, 6 or 10");
    Rat kappa = Rat(4) / zeta_K_at_negative(k);
    QExp e(prec);
    e.set(0, 0, 1);
    for (long i = 1; i <= prec; ++i) {
        for (long j : valid_js(i)) {
            RElem x = index_to_element(i, j);
            e.set(i, j, kappa * Rat(divisor_sigma(x, k - 1)));
        }
    }
    return e;
}

static GeneratorSet build_generators(long prec) {
    if (prec < 3) throw math_error("generators need precision >= 3");
    QExp A2 = eisenstein(2, prec);

    // B6 = c6 (A2^3 - E6), scaled so that B6(q0,1) = Delta
    QExp E6 = eisenstein(6, prec);
    QExp B6raw = A2.pow(3) - E6;
    std::vector<Rat> rb = B6raw.restrict_q1();
    if (rb[0] != 0 || rb[1] == 0) throw math_error("B6 normalization singular: bad kappa_6");
    QExp B6 = B6raw * (Rat(1) / rb[1]);
    std::vector<Rat> delta = elliptic_delta(prec);
    std::vector<Rat> rB6 = B6.restrict_q1();
    for (long n = 0; n <= prec; ++n)
        if (rB6[n] != delta[n])
            throw math_error("B6 restriction disagrees with Delta at q^" + std::to_string(n));

    // C10: kill the elliptic restriction of E10 - A2^5, then pin the scale by
    // requiring the (2,4) coefficient of A2*C10 to cancel B6^2 there.
    QExp E10 = eisenstein(10, prec);
    QExp E10cusp = E10 - A2.pow(5);
    QExp A2A2B6 = A2.pow(2) * B6;
    std::vector<Rat> rcross = A2A2B6.restrict_q1();
    if (rcross[1] != 1)
        throw math_error("A2^2 B6 restriction is not E4^2 Delta; normalization broken");
    Rat d = E10cusp.restrict_q1()[1];
    QExp C10raw = E10cusp - A2A2B6 * d;
    for (const Rat& c : C10raw.restrict_q1())
        if (c != 0) throw math_error("C10 restriction does not vanish: bad kappa_10");
    auto nuC = C10raw.nu();
    if (!nuC || *nuC != IndexPair{2, 4})
        throw math_error("C10 does not have valuation (2,4)");
    Rat scale = make_rat(1, 4) / C10raw.coeff(2, 4);
    QExp C10 = C10raw * scale;

    // nu(X12) = (2,5) for X12 = (A2 C10 - B6^2)/4
    QExp X12 = (A2 * C10 - B6 * B6) * make_rat(1, 4);
    auto nuX = X12.nu();
    if (!nuX || *nuX != IndexPair{2, 5}) throw math_error("X12 valuation check failed");

    for (const QExp* f : {&A2, &B6, &C10}) {
        if (!f->check_symmetric()) throw math_error("generator is not symmetric");
        if (!f->check_unit_invariant()) throw math_error("generator is not unit invariant");
    }
    return GeneratorSet{std::move(A2), std::move(B6), std::move(C10), prec};
}

const GeneratorSet& generators(long prec) {
    static std::mutex mu;
    static std::map<long, GeneratorSet> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, build_generators(prec)).first;
    return it->second;
}

std::vector<Monomial> monomial_exponents(unsigned w) {
    if (w % 2 != 0 || w == 0) throw math_error("weight must be even and positive");
    std::vector<Monomial> out;
    for (unsigned c = 0; 10 * c <= w; ++c)
        for (unsigned b = 0; 10 * c + 6 * b <= w; ++b)
            out.push_back({(w - 10 * c - 6 * b) / 2, b, c});
    return out;
}

std::vector<QExp> monomial_basis(unsigned w, long prec) {
    const GeneratorSet& g = generators(prec);
    std::vector<Monomial> mons = monomial_exponents(w);
    std::vector<QExp> out;
    out.reserve(mons.size());
    for (const Monomial& m : mons)
        out.push_back(g.A2.pow(m.a) * g.B6.pow(m.b) * g.C10.pow(m.c));
    return out;
}

std::string ExtremalResult::pm_str() const {
    switch (pm) {
        case PmClass::plus: return "+";
        case PmClass::minus: return "-";
        default: {
            std::ostringstream os;
            os << "other(" << pm_ratio << ")";
            return os.str();
        }
    }
}

namespace {

// Incremental affine system; recorded rows are kept fully reduced.
class AffineEliminator {
  public:
    explicit AffineEliminator(size_t dim) : dim_(dim) {}

    size_t rank() const { return rows_.size(); }

    enum class RowFate { redundant, inconsistent, pivot };

    // Tries to impose sum coeffs*c = rhs; an inconsistent row is NOT recorded.
    RowFate impose(std::vector<Rat> coeffs, Rat rhs) {
        reduce(coeffs, rhs);
        size_t p = first_nonzero(coeffs);
        if (p == SIZE_MAX) return rhs == 0 ? RowFate::redundant : RowFate::inconsistent;
        Rat inv = Rat(1) / coeffs[p];
        for (Rat& v : coeffs) v *= inv;
        rhs *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat f = rows_[r].first[p];
            if (f == 0) continue;
            for (size_t c = 0; c < dim_; ++c) rows_[r].first[c] -= f * coeffs[c];
            rows_[r].second -= f * rhs;
        }
        pivot_col_.push_back(p);
        rows_.emplace_back(std::move(coeffs), std::move(rhs));
        return RowFate::pivot;
    }

    // Valid once rank == dim: the unique solution.
    std::vector<Rat> solve() const {
        if (rank() != dim_) throw math_error("affine system not yet determined");
        std::vector<Rat> x(dim_);
        for (size_t r = 0; r < rows_.size(); ++r) x[pivot_col_[r]] = rows_[r].second;
        return x;
    }

  private:
    void reduce(std::vector<Rat>& coeffs, Rat& rhs) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat f = coeffs[pivot_col_[r]];
            if (f == 0) continue;
            for (size_t c = 0; c < dim_; ++c) coeffs[c] -= f * rows_[r].first[c];
            rhs -= f * rows_[r].second;
        }
    }

    static size_t first_nonzero(const std::vector<Rat>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return SIZE_MAX;
    }

    size_t dim_;
    std::vector<size_t> pivot_col_;
    std::vector<std::pair<std::vector<Rat>, Rat>> rows_;
};

}  // namespace

ExtremalResult extremal_form(unsigned w, long prec) {
    if (w % 2 != 0 || w == 0) throw math_error("extremal_form: weight must be even and positive");
    std::vector<Monomial> mons = monomial_exponents(w);
    std::vector<QExp> basis = monomial_basis(w, prec);
    const size_t d = mons.size();

    AffineEliminator sys(d);

    // constant term 1: exactly the pure A2 power has a constant term
    {
        std::vector<Rat> row(d, Rat(0));
        for (size_t m = 0; m < d; ++m)
            if (mons[m].b == 0 && mons[m].c == 0) row[m] = 1;
        if (sys.impose(std::move(row), Rat(1)) != AffineEliminator::RowFate::pivot)
            throw math_error("constant-term constraint degenerate");
    }

    // impose zero coefficients in lexicographic index order while feasible;
    // the first infeasible row fixes nu(f-1)
    bool nu_fixed = false;
    bool unique_at_nu = false;
    IndexPair nu{0, 0};
    for (long i = 1; i <= prec && sys.rank() < d; ++i) {
        for (long j : valid_js(i)) {
            std::vector<Rat> row(d);
            for (size_t m = 0; m < d; ++m) row[m] = basis[m].coeff(i, j);
            auto fate = sys.impose(std::move(row), Rat(0));
            if (fate == AffineEliminator::RowFate::inconsistent && !nu_fixed) {
                nu_fixed = true;
                nu = {i, j};
                unique_at_nu = (sys.rank() == d);
            }
            if (sys.rank() == d) break;
        }
    }
    if (sys.rank() < d)
        throw precision_error("extremal_form: precision " + std::to_string(prec) +
                              " cannot pin the weight-" + std::to_string(w) + " solution");

    std::vector<Rat> c = sys.solve();
    QExp f(prec);
    for (size_t m = 0; m < d; ++m)
        if (c[m] != 0) f = f + basis[m] * c[m];

    auto nu_check = f.nu_minus_constant();
    if (!nu_check)
        throw precision_error("extremal_form: nu(f-1) lies beyond the expansion window");
    if (nu_fixed && *nu_check != nu)
        throw math_error("extremal solver inconsistency: imposed and observed nu differ");
    if (!nu_fixed) {
        nu = *nu_check;
        unique_at_nu = true;  // space was already a single point before nu was reached
    }

    ExtremalResult r;
    r.weight = w;
    r.form = f;
    r.s = nu.i;
    r.t = nu.j;
    r.s_eta = f.row_sum(nu.i);
    r.s_one = f.column_sum_symmetric(nu.j);
    r.unique = unique_at_nu;
    Rat corner = f.coeff(nu.i, nu.j);
    if (r.s_one == corner) {
        r.pm = PmClass::plus;
    } else if (r.s_one == 2 * corner) {
        r.pm = PmClass::minus;
    } else {
        r.pm = PmClass::other;
        r.pm_ratio = r.s_one / corner;
    }
    return r;
}

bool check_nu_bound(const ExtremalResult& r) {
    long s_bound = 1 + static_cast<long>(r.weight) / 6;
    if (r.s > s_bound) return false;
    if (2 * r.s > r.t) return false;
    if (r.t > (5 * r.s) / 2) return false;
    return true;
}

const std::array<TableRow, 12>& expected_table() {
    static const std::array<TableRow, 12> rows = {{
        {2, 1, 2, Int(240), Int(120), '+'},
        {4, 1, 2, Int(480), Int(240), '+'},
        {6, 2, 4, Int(196560), Int(37800), '+'},
        {8, 2, 4, Int(146880), Int(21600), '+'},
        {10, 2, 5, Int(39600), Int(79200), '-'},
        {12, 3, 6, Int(52416000), Int(2620800), '+'},
        {14, 3, 6, Int(15590400), Int(537600), '+'},
        {16, 3, 7, Int(2611200), Int(2611200), '-'},
        {18, 4, 8, Int(6218175600), Int(75411000), '+'},
        {20, 4, 9, Int(1250172000), Int(609840000), '-'},
        {24, 5, 10, Int(565866362880), Int(1655821440), '+'},
        {30, 6, 13, Int(45792819072000), Int(3217294080000), '-'},
    }};
    return rows;
}

static TableDiff diff_row(const TableRow& exp_row, long prec) {
    TableDiff d;
    d.expected = exp_row;
    d.computed = extremal_form(exp_row.weight, prec);
    const ExtremalResult& r = d.computed;
    auto mism = [&](const std::string& what, const std::string& got, const std::string& want) {
        d.mismatches.push_back("weight " + std::to_string(exp_row.weight) + " " + what +
                               ": computed " + got + ", expected " + want);
    };
    if (r.s != exp_row.s || r.t != exp_row.t)
        mism("nu", "(" + std::to_string(r.s) + "," + std::to_string(r.t) + ")",
             "(" + std::to_string(exp_row.s) + "," + std::to_string(exp_row.t) + ")");
    if (r.s_eta != Rat(exp_row.s_eta))
        mism("s_eta", r.s_eta.get_str(), exp_row.s_eta.get_str());
    if (r.s_one != Rat(exp_row.s_one))
        mism("s_one", r.s_one.get_str(), exp_row.s_one.get_str());
    if (r.pm_str() != std::string(1, exp_row.pm))
        mism("pm", r.pm_str(), std::string(1, exp_row.pm));
    if (!r.unique) mism("unique", "false", "true");
    if (!check_nu_bound(r)) mism("nu bound", "violated", "holds");
    return d;
}

std::vector<TableDiff> table_reproduce(long prec, unsigned threads) {
    const auto& rows = expected_table();
    generators(prec);  // build once before workers share the cache
    std::vector<TableDiff> out(rows.size());
    if (threads <= 1) {
        for (size_t k = 0; k < rows.size(); ++k) out[k] = diff_row(rows[k], prec);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::vector<std::string> errors;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t k = next.fetch_add(1);
                if (k >= rows.size()) return;
                try {
                    out[k] = diff_row(rows[k], prec);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    errors.emplace_back(e.what());
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (!errors.empty()) throw precision_error(errors.front());
    return out;
}

}  // namespace golden
