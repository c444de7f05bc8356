#include <golden/rgram.hpp>

#include <algorithm>

namespace golden {

using kernels::i32;
using kernels::i64;

RGram::RGram(RMat m) : g(std::move(m)) {
    if (g.rows() != g.cols()) throw math_error("RGram must be square");
    if (!g.is_symmetric()) throw math_error("RGram must be symmetric");
}

RElem rdet(const RMat& m) {
    return bareiss_det(m, [](const RElem& a, const RElem& b) { return exact_div(a, b); });
}

bool is_even_unimodular(const RGram& g) {
    for (size_t k = 0; k < g.rank(); ++k) {
        const RElem& d = g.g.at(k, k);
        if (d.a % 2 != 0 || d.b % 2 != 0) return false;  // Q(b_k) must lie in R
    }
    return is_unit(rdet(g.g));
}

bool is_totally_positive_definite(const RGram& g) {
    auto minors = principal_minors_ff(
        g.g, [](const RElem& a, const RElem& b) { return exact_div(a, b); });
    for (const RElem& d : minors)
        if (d.is_zero() || !is_totally_positive(d)) return false;
    return true;
}

ZGram trace_gram(const RGram& g, const KElem& alpha) {
    if (!is_totally_positive(alpha)) throw math_error("trace_gram: alpha is not totally positive");
    size_t n = g.rank();
    // theta^0, theta^1, theta^2
    const KElem powers[3] = {KElem(1), KElem(theta()), KElem(theta_sq())};
    IMat t(2 * n, 2 * n);
    for (size_t s = 0; s < 2; ++s)
        for (size_t u = 0; u < 2; ++u)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    KElem v = alpha * powers[s + u] * KElem(g.g.at(k, l));
                    Rat tr = v.trace();
                    if (!is_integer(tr))
                        throw math_error("trace_gram: non-integral trace at alpha = " + alpha.str());
                    t.at(s * n + k, u * n + l) = tr.get_num();
                }
    ZGram out(std::move(t));
    if (!out.positive_definite()) throw math_error("trace_gram: result is not positive definite");
    return out;
}

IMat theta_action(size_t n) {
    IMat m(2 * n, 2 * n);
    for (size_t k = 0; k < n; ++k) {
        m.at(n + k, k) = 1;       // theta b_k = (theta b_k)
        m.at(k, n + k) = 1;       // theta (theta b_k) = b_k - theta b_k
        m.at(n + k, n + k) = -1;
    }
    return m;
}

IMat theta_bar_action(size_t n) {
    IMat m(2 * n, 2 * n);
    for (size_t k = 0; k < n; ++k) {
        m.at(k, k) = -1;          // theta_bar b_k = -b_k - theta b_k
        m.at(n + k, k) = -1;
        m.at(k, n + k) = -1;      // theta_bar theta b_k = -b_k
    }
    return m;
}

RElem r_bilinear(const RGram& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    size_t n = g.rank();
    if (x.size() != 2 * n || y.size() != 2 * n) throw math_error("r_bilinear shape mismatch");
    RElem total{0, 0};
    for (size_t k = 0; k < n; ++k) {
        RElem cx{x[k], x[n + k]};
        if (cx.is_zero()) continue;
        for (size_t l = 0; l < n; ++l) {
            RElem cy{y[l], y[n + l]};
            if (cy.is_zero()) continue;
            total += cx * cy * g.g.at(k, l);
        }
    }
    return total;
}

RElem r_quadratic(const RGram& g, const std::vector<Int>& x) {
    RElem b = r_bilinear(g, x, x);
    if (b.a % 2 != 0 || b.b % 2 != 0) throw math_error("odd vector: B(x,x) not in 2R");
    return {b.a / 2, b.b / 2};
}

QExp hilbert_theta(const RGram& g, long prec, unsigned threads) {
    for (size_t k = 0; k < g.rank(); ++k) {
        const RElem& d = g.g.at(k, k);
        if (d.a % 2 != 0 || d.b % 2 != 0) throw math_error("hilbert_theta needs an even lattice");
    }
    ZGram t_eta_raw = trace_gram(g, eta_inv());
    ZGram t_one_raw = trace_gram(g, KElem(1));
    size_t m = t_eta_raw.dim();

    // enumerate in a reduced basis; transform both forms consistently so the
    // binning stays coherent, and keep the transform for exact spot checks
    auto [red_eta, basis_u] = lll_reduce_gram(t_eta_raw.g);
    ZGram t_eta(std::move(red_eta));
    ZGram t_one(basis_u.transpose() * t_one_raw.g * basis_u);

    std::vector<ShortVector> vecs = enumerate_short(t_eta, prec);
    QExp theta(prec);
    theta.set(0, 0, 1);
    if (vecs.empty()) return theta;

    // j = q_1(lambda) for each vector; exact int64 kernels when ranges allow
    std::vector<i32> gflat(m * m);
    bool flat_ok = true;
    i64 max_coord = 0;
    for (const auto& v : vecs)
        for (i32 c : v.x) max_coord = std::max<i64>(max_coord, std::abs(static_cast<long>(c)));
    for (size_t i = 0; i < m && flat_ok; ++i)
        for (size_t j = 0; j < m; ++j) {
            const Int& e = t_one.g.at(i, j);
            if (!e.fits_sint_p()) { flat_ok = false; break; }
            gflat[i * m + j] = static_cast<i32>(e.get_si());
        }
    flat_ok = flat_ok && kernels::fits(gflat.data(), static_cast<int>(m), max_coord);

    std::vector<i64> norm2_one(vecs.size());
    if (flat_ok) {
        std::vector<i32> xs(vecs.size() * m);
        for (size_t v = 0; v < vecs.size(); ++v)
            std::copy(vecs[v].x.begin(), vecs[v].x.end(), xs.begin() + v * m);
        kernels::qform_batch_threaded(gflat.data(), static_cast<int>(m), xs.data(), vecs.size(),
                                      norm2_one.data(), threads);
    } else {
        for (size_t v = 0; v < vecs.size(); ++v) {
            Int total = 0;
            for (size_t r = 0; r < m; ++r)
                for (size_t c = 0; c < m; ++c)
                    total += t_one.g.at(r, c) * Int(vecs[v].x[r]) * Int(vecs[v].x[c]);
            norm2_one[v] = to_i64(total);
        }
    }

    for (size_t v = 0; v < vecs.size(); ++v) {
        if (vecs[v].norm2 % 2 != 0 || norm2_one[v] % 2 != 0)
            throw math_error("hilbert_theta: odd polar norm on an even lattice");
        long i = static_cast<long>(vecs[v].norm2 / 2);
        long j = static_cast<long>(norm2_one[v] / 2);
        theta.add(i, j, 2);  // +- pair
    }

    // spot-check the binning against the exact R-valued quadratic form,
    // mapping sample vectors back to the R-basis coordinates
    size_t sample = std::min<size_t>(vecs.size(), 64);
    for (size_t v = 0; v < sample; ++v) {
        std::vector<Int> xr(m, 0);
        for (size_t r = 0; r < m; ++r) xr[r] = Int(vecs[v].x[r]);
        std::vector<Int> x = basis_u.apply(xr);
        RElem q = r_quadratic(g, x);
        auto [ii, jj] = element_to_index(q);
        if (ii != static_cast<long>(vecs[v].norm2 / 2) || jj != static_cast<long>(norm2_one[v] / 2))
            throw math_error("hilbert_theta: index binning disagrees with Q(lambda)");
    }
    return theta;
}

GoldenCheckReport golden_check(const RGram& g, long prec) {
    GoldenCheckReport rep;
    if (!is_even_unimodular(g)) {
        rep.golden = false;
        rep.detail = "not even unimodular";
        return rep;
    }
    size_t n = g.rank();
    if (n % 2 != 0) throw math_error("golden_check: theta series has non-integral weight");
    unsigned w = static_cast<unsigned>(n / 2);

    QExp theta = hilbert_theta(g, prec);
    // generators need prec >= 3; compare within the theta window either way
    ExtremalResult ex = extremal_form(w, std::max<long>(prec, 3));
    rep.golden = (theta == ex.form.truncated(prec));
    if (!rep.golden) rep.detail = "theta series differs from the extremal form";

    rep.min_eta = static_cast<long>(minimum_norm2(trace_gram(g, eta_inv())) / 2);
    rep.min_one = static_cast<long>(minimum_norm2(trace_gram(g, KElem(1))) / 2);
    long N = static_cast<long>(2 * n);
    rep.extremal_bound = 1 + N / 24;
    rep.meets_extremal_bound = (rep.min_eta == rep.extremal_bound);
    return rep;
}

RMat hermite_reduce_columns(RMat w) {
    size_t n = w.rows(), m = w.cols();
    for (size_t r = 0; r < n; ++r) {
        // clear row r to the right of column r by Euclidean gcd steps
        for (;;) {
            size_t best = SIZE_MAX;
            Int best_norm;
            for (size_t c = r; c < m; ++c) {
                if (w.at(r, c).is_zero()) continue;
                Int nn = abs(w.at(r, c).norm());
                if (best == SIZE_MAX || nn < best_norm) {
                    best = c;
                    best_norm = nn;
                }
            }
            if (best == SIZE_MAX) throw math_error("hermite reduction: rank deficient input");
            if (best != r)
                for (size_t i = 0; i < n; ++i) std::swap(w.at(i, r), w.at(i, best));
            bool clean = true;
            for (size_t c = r + 1; c < m; ++c) {
                if (w.at(r, c).is_zero()) continue;
                RElem q = euclid_divmod(w.at(r, c), w.at(r, r)).first;
                if (!q.is_zero())
                    for (size_t i = 0; i < n; ++i) w.at(i, c) -= q * w.at(i, r);
                if (!w.at(r, c).is_zero()) clean = false;
            }
            if (clean) break;
        }
        // canonical associate pivot for determinism
        RElem pivot = w.at(r, r);
        RElem unit = exact_div(canonical_associate(pivot), pivot);
        if (!(unit == RElem{1, 0}))
            for (size_t i = 0; i < n; ++i) w.at(i, r) = w.at(i, r) * unit;
        // reduce earlier pivot rows' entries in this column block (size reduction)
        for (size_t c = 0; c < r; ++c) {
            RElem q = euclid_divmod(w.at(r, c), w.at(r, r)).first;
            if (!q.is_zero())
                for (size_t i = 0; i < n; ++i) w.at(i, c) -= q * w.at(i, r);
        }
    }
    RMat h(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h.at(i, j) = w.at(i, j);
    return h;
}

GoldenStructure goldenex(const ZGram& t, const IMat& T, std::optional<IMat> z_source) {
    size_t m = t.dim();
    if (m == 0 || m % 2 != 0)
        throw math_error("goldenex: rank must be even for a Z[theta]-structure");
    size_t n = m / 2;
    if (T.rows() != m || T.cols() != m) throw math_error("goldenex: T has wrong shape");
    if (z_source) {
        const IMat& z = *z_source;
        if (z.rows() != m || z.cols() != m) throw math_error("goldenex: z has wrong shape");
        IMat z2 = z * z;
        IMat z4 = z2 * z2;
        if (!(z4 * z == IMat::identity(m))) throw math_error("goldenex: z does not have order 5");
        if (!(z + z4 == T)) throw math_error("goldenex: T is not z + z^4");
    }

    // T^2 + T = 1  (minimal polynomial of theta)
    if (!(T * T + T == IMat::identity(m)))
        throw math_error("goldenex: T does not satisfy T^2 + T = 1");
    // symmetric with respect to the form
    if (!(t.g * T == T.transpose() * t.g))
        throw math_error("goldenex: T is not symmetric for the form");
    if (!t.is_even()) throw math_error("goldenex: lattice is not even");
    Int dt = t.det();
    if (dt != 1 && dt != -1) throw math_error("goldenex: lattice is not unimodular");

    // greedy K-basis v_1..v_n with (v, Tv) a Q-basis
    std::vector<std::vector<Int>> vs;
    {
        // incremental rational rank tracking via a working copy
        std::vector<std::vector<Rat>> rows;  // echelon rows
        auto try_add = [&](const std::vector<Rat>& vec) {
            std::vector<Rat> r = vec;
            for (const auto& e : rows) {
                size_t p = 0;
                while (p < m && e[p] == 0) ++p;
                if (p < m && r[p] != 0) {
                    Rat f = r[p] / e[p];
                    for (size_t c = 0; c < m; ++c) r[c] -= f * e[c];
                }
            }
            for (size_t c = 0; c < m; ++c)
                if (r[c] != 0) {
                    rows.push_back(r);
                    return true;
                }
            return false;
        };
        for (size_t i = 0; i < m && vs.size() < n; ++i) {
            std::vector<Int> e(m, 0), te(m, 0);
            e[i] = 1;
            for (size_t r = 0; r < m; ++r) te[r] = T.at(r, i);
            std::vector<Rat> eq(m), teq(m);
            for (size_t r = 0; r < m; ++r) {
                eq[r] = Rat(e[r]);
                teq[r] = Rat(te[r]);
            }
            auto saved = rows;
            if (try_add(eq) && try_add(teq)) {
                vs.push_back(e);
            } else {
                rows = saved;
            }
        }
    }
    if (vs.size() != n) throw math_error("goldenex: could not build a K-basis");

    // M = [v_1..v_n, Tv_1..Tv_n]; K-coordinates of e_i are M^{-1} e_i
    QMat M(m, m);
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < m; ++r) {
            M.at(r, j) = Rat(vs[j][r]);
            Int tv = 0;
            for (size_t c = 0; c < m; ++c) tv += T.at(r, c) * vs[j][c];
            M.at(r, n + j) = Rat(tv);
        }
    QMat Minv = inverse(M);

    Int d = 1;
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c) {
            Int den = Minv.at(r, c).get_den();
            d = lcm(d, den);
        }

    // generators of d * Lambda in R-coordinates: columns indexed by e_i
    RMat gen(n, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat a = Minv.at(j, i) * Rat(d);
            Rat b = Minv.at(n + j, i) * Rat(d);
            if (!is_integer(a) || !is_integer(b)) throw math_error("goldenex: clearing failed");
            gen.at(j, i) = RElem{a.get_num(), b.get_num()};
        }

    RMat h = hermite_reduce_columns(gen);

    // convert the R-basis back to lattice vectors: lambda_j = (1/d) sum_r (a + b T) v_r
    std::vector<std::vector<Int>> tvs(n, std::vector<Int>(m, 0));
    for (size_t r = 0; r < n; ++r)
        for (size_t row = 0; row < m; ++row)
            for (size_t col = 0; col < m; ++col) tvs[r][row] += T.at(row, col) * vs[r][col];
    std::vector<std::vector<Int>> lambda(n, std::vector<Int>(m, 0));
    for (size_t j = 0; j < n; ++j) {
        std::vector<Rat> acc(m, Rat(0));
        for (size_t r = 0; r < n; ++r) {
            const RElem& c = h.at(r, j);
            if (c.is_zero()) continue;
            for (size_t row = 0; row < m; ++row) {
                acc[row] += make_rat(c.a, d) * Rat(vs[r][row]);
                acc[row] += make_rat(c.b, d) * Rat(tvs[r][row]);
            }
        }
        for (size_t row = 0; row < m; ++row) {
            if (!is_integer(acc[row]))
                throw math_error("goldenex: extracted basis vector is not integral");
            lambda[j][row] = acc[row].get_num();
        }
    }

    // size-reduce the R-basis pairwise: lambda_k -= q lambda_l with q the
    // Euclidean rounding of B(lambda_k,lambda_l)/B(lambda_l,lambda_l); the
    // scalar theta acts by the conjugate root -1-T here (see below)
    {
        auto bil = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
            Int s = 0;
            for (size_t r = 0; r < m; ++r)
                for (size_t c = 0; c < m; ++c) s += x[r] * t.g.at(r, c) * y[c];
            return s;
        };
        auto apply_T = [&](const std::vector<Int>& x) {
            std::vector<Int> y(m, 0);
            for (size_t r = 0; r < m; ++r)
                for (size_t c = 0; c < m; ++c) y[r] += T.at(r, c) * x[c];
            return y;
        };
        auto r_form = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
            Int b_tt = bil(apply_T(x), apply_T(y));
            Int b_xy = bil(x, y);
            return RElem{b_tt, b_tt - b_xy};  // B_R(x,y)
        };
        // both embeddings must stay small: measure by q_1-type balanced norm
        auto balanced = [&](const std::vector<Int>& x) -> Int {
            std::vector<Int> tx = apply_T(x);
            return bil(x, x) + bil(tx, tx);
        };
        bool improved = true;
        for (int sweep = 0; sweep < 64 && improved; ++sweep) {
            improved = false;
            for (size_t k = 0; k < n; ++k) {
                // unit-orbit normalization: multiplying by theta or conj(theta)
                // may rebalance the two embeddings
                for (;;) {
                    Int cur = balanced(lambda[k]);
                    std::vector<Int> tk = apply_T(lambda[k]);
                    std::vector<Int> tbark(m);
                    for (size_t r = 0; r < m; ++r) tbark[r] = -lambda[k][r] - tk[r];
                    if (balanced(tk) < cur) {
                        lambda[k] = std::move(tk);
                        improved = true;
                    } else if (balanced(tbark) < cur) {
                        lambda[k] = std::move(tbark);
                        improved = true;
                    } else {
                        break;
                    }
                }
                for (size_t l = 0; l < n; ++l) {
                    if (k == l) continue;
                    KElem q = KElem(r_form(lambda[k], lambda[l]));
                    KElem dl = KElem(r_form(lambda[l], lambda[l]));
                    if (dl.is_zero()) continue;
                    KElem ratio = q * dl.inverse();
                    Int best_norm = balanced(lambda[k]);
                    std::optional<std::vector<Int>> best;
                    std::vector<Int> tl = apply_T(lambda[l]);
                    for (Int qa : {rat_floor(ratio.a), rat_ceil(ratio.a)}) {
                        for (Int qb : {rat_floor(ratio.b), rat_ceil(ratio.b)}) {
                            if (qa == 0 && qb == 0) continue;
                            // subtract (qa + qb*theta) lambda_l; theta acts by -1-T
                            std::vector<Int> cand = lambda[k];
                            for (size_t r = 0; r < m; ++r)
                                cand[r] -= qa * lambda[l][r] - qb * lambda[l][r] - qb * tl[r];
                            Int nn = balanced(cand);
                            if (nn < best_norm) {
                                best_norm = nn;
                                best = std::move(cand);
                            }
                        }
                    }
                    if (best) {
                        lambda[k] = std::move(*best);
                        improved = true;
                    }
                }
            }
        }
    }

    // The reconstruction formula below makes the abstract scalar theta act by
    // the conjugate root -1-T, so the trace basis pairs lambda with
    // (-1-T) lambda. The basis change must be unimodular: an R-basis of the
    // whole lattice.
    IMat P(m, m);
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < m; ++r) {
            P.at(r, j) = lambda[j][r];
            Int tv = 0;
            for (size_t c = 0; c < m; ++c) tv += T.at(r, c) * lambda[j][c];
            P.at(r, n + j) = -lambda[j][r] - tv;
        }
    Int dp = det(P);
    if (dp != 1 && dp != -1)
        throw math_error("goldenex: extracted module is not the full lattice");

    // Gram over R: B(x,y) = b(Tx,Ty) + (b(Tx,Ty) - b(x,y)) theta, b = polar form of t
    auto bil = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s = 0;
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) s += x[r] * t.g.at(r, c) * y[c];
        return s;
    };
    auto apply_T = [&](const std::vector<Int>& x) {
        std::vector<Int> y(m, 0);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) y[r] += T.at(r, c) * x[c];
        return y;
    };
    RMat gram(n, n);
    for (size_t k = 0; k < n; ++k) {
        auto tk = apply_T(lambda[k]);
        for (size_t l = k; l < n; ++l) {
            auto tl = apply_T(lambda[l]);
            Int b_tt = bil(tk, tl);
            Int b_xy = bil(lambda[k], lambda[l]);
            RElem entry{b_tt, b_tt - b_xy};
            gram.at(k, l) = entry;
            gram.at(l, k) = entry;
        }
    }

    GoldenStructure out;
    out.gram = RGram(std::move(gram));
    out.z_source = std::move(z_source);
    out.basis_change = P;

    if (!is_even_unimodular(out.gram))
        throw math_error("goldenex: extracted Gram is not even unimodular");
    if (!is_totally_positive_definite(out.gram))
        throw math_error("goldenex: extracted Gram is not totally positive definite");
    ZGram back = trace_gram(out.gram, eta_inv());
    if (!(back.g == P.transpose() * t.g * P))
        throw math_error("goldenex: trace lattice does not match the input");
    return out;
}

bool galois_check(const RGram& g, const IMat& sigma) {
    size_t n = g.rank();
    size_t m = 2 * n;
    if (sigma.rows() != m || sigma.cols() != m) throw math_error("galois_check: sigma shape");
    ZGram t_eta = trace_gram(g, eta_inv());
    if (!(sigma.transpose() * t_eta.g * sigma == t_eta.g))
        throw math_error("galois_check: sigma is not an isometry of L_{eta^-1}");

    auto col = [&](const IMat& mt, size_t j) {
        std::vector<Int> v(m);
        for (size_t r = 0; r < m; ++r) v[r] = mt.at(r, j);
        return v;
    };
    auto add = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> v(m);
        for (size_t r = 0; r < m; ++r) v[r] = x[r] + y[r];
        return v;
    };

    IMat ident = IMat::identity(m);
    RElem th2 = theta_sq();
    // polar identity: checking B on all basis pairs covers Q on sums
    for (size_t k = 0; k < m; ++k) {
        for (size_t l = k; l < m; ++l) {
            std::vector<Int> ek = col(ident, k), el = col(ident, l);
            std::vector<Int> sk = col(sigma, k), sl = col(sigma, l);
            RElem lhs = r_bilinear(g, sk, sl);
            RElem rhs = (th2 * r_bilinear(g, ek, el)).conj();
            if (!(lhs == rhs)) return false;
            // and explicitly on the sum, per the quadratic identity
            if (l == k + 1) {
                RElem qs = r_quadratic(g, add(sk, sl));
                RElem qe = (th2 * r_quadratic(g, add(ek, el))).conj();
                if (!(qs == qe)) return false;
            }
        }
    }
    return true;
}

FamilyCertificate modular_family(const RGram& g, long a, double budget_seconds) {
    if (a < 0) throw math_error("modular_family: a must be >= 0");
    if (!is_even_unimodular(g)) throw math_error("modular_family needs an even unimodular lattice");
    FamilyCertificate cert;
    cert.a = a;
    cert.p = Int(a) * a + 5 * a + 5;

    KElem alpha = KElem(1) + KElem(a) * eta_inv();
    cert.lattice = trace_gram(g, alpha);
    cert.determinant = cert.lattice.det();
    cert.det_ok = (cert.determinant == ipow(cert.p, static_cast<unsigned long>(g.rank())));

    i64 s = minimum_norm2(trace_gram(g, eta_inv())) / 2;
    i64 t = minimum_norm2(trace_gram(g, KElem(1))) / 2;
    cert.min_bound = t + a * s;
    cert.min_q = minimum_norm2(cert.lattice) / 2;
    cert.min_ok = (cert.min_q >= cert.min_bound);
    cert.kissing = theta_counts(cert.lattice, 2 * cert.min_q)[2 * cert.min_q];
    cert.modularity = modularity_check(cert.lattice, cert.p, budget_seconds);
    return cert;
}

bool trace_identity_check(const RGram& g, const std::vector<std::vector<Int>>& samples) {
    size_t n = g.rank();
    ZGram t_eta = trace_gram(g, eta_inv());
    ZGram t_one = trace_gram(g, KElem(1));
    IMat th = theta_action(n);
    IMat thbar = theta_bar_action(n);
    auto q = [&](const ZGram& t, const std::vector<Int>& x) {
        Int s = 0;
        for (size_t r = 0; r < 2 * n; ++r)
            for (size_t c = 0; c < 2 * n; ++c) s += x[r] * t.g.at(r, c) * x[c];
        return s;  // 2 q(x)
    };
    for (const auto& x : samples) {
        if (x.size() != 2 * n) throw math_error("trace_identity_check: bad sample length");
        std::vector<Int> tx = th.apply(x);
        std::vector<Int> tbx = thbar.apply(x);
        // q_1(v) = q_eta(v) + q_eta(theta_bar v)
        if (q(t_one, x) != q(t_eta, x) + q(t_eta, tbx)) return false;
        // 5 q_eta(v) = q_1(v) + q_1(theta v)
        if (5 * q(t_eta, x) != q(t_one, x) + q(t_one, tx)) return false;
    }
    return true;
}

bool trace_identity_check(const RGram& g) {
    size_t m = 2 * g.rank();
    std::vector<std::vector<Int>> samples;
    for (size_t k = 0; k < m; ++k) {
        std::vector<Int> e(m, 0);
        e[k] = 1;
        samples.push_back(std::move(e));
    }
    for (const ShortVector& v : enumerate_short(trace_gram(g, eta_inv()), 2)) {
        std::vector<Int> x(m);
        for (size_t r = 0; r < m; ++r) x[r] = Int(v.x[r]);
        samples.push_back(std::move(x));
    }
    return trace_identity_check(g, samples);
}

RGram orthogonal_sum(const RGram& g1, const RGram& g2) {
    size_t n1 = g1.rank(), n2 = g2.rank();
    RMat m(n1 + n2, n1 + n2);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) m.at(i, j) = g1.g.at(i, j);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) m.at(n1 + i, n1 + j) = g2.g.at(i, j);
    return RGram(std::move(m));
}

}  // namespace golden
