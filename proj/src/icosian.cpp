#include <golden/icosian.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace golden {

Quat Quat::operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

Quat Quat::inverse() const {
    KElem n = nrd();
    if (n.is_zero()) throw math_error("inverse of zero quaternion");
    KElem ninv = n.inverse();
    Quat c = conj();
    return {c.w * ninv, c.x * ninv, c.y * ninv, c.z * ninv};
}

namespace {

struct QuatKey {
    Rat c[8];
    bool operator<(const QuatKey& o) const {
        for (int i = 0; i < 8; ++i) {
            if (c[i] < o.c[i]) return true;
            if (c[i] > o.c[i]) return false;
        }
        return false;
    }
};

QuatKey key_of(const Quat& q) {
    return {{q.w.a, q.w.b, q.x.a, q.x.b, q.y.a, q.y.b, q.z.a, q.z.b}};
}

std::vector<Quat> build_units() {
    std::vector<Quat> units;
    const KElem half = KElem(make_rat(1, 2), Rat(0));
    const KElem sigma(Rat(0), Rat(-1));  // (1 - sqrt5)/2 = -theta
    const KElem tau(Rat(1), Rat(1));     // (1 + sqrt5)/2 = phi

    // 8 coordinate units
    for (int pos = 0; pos < 4; ++pos)
        for (int s = -1; s <= 1; s += 2) {
            KElem c[4] = {KElem(0), KElem(0), KElem(0), KElem(0)};
            c[pos] = KElem(s);
            units.push_back({c[0], c[1], c[2], c[3]});
        }
    // 16 half units
    for (int s0 = -1; s0 <= 1; s0 += 2)
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
                for (int s3 = -1; s3 <= 1; s3 += 2)
                    units.push_back({half * KElem(s0), half * KElem(s1), half * KElem(s2),
                                     half * KElem(s3)});
    // 96: even coordinate permutations of (0, +-1, +-sigma, +-tau)/2
    const int even_perms[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
                                   {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
                                   {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    for (const auto& perm : even_perms)
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2)
                for (int s3 = -1; s3 <= 1; s3 += 2) {
                    KElem vals[4] = {KElem(0), half * KElem(s1), half * KElem(s2) * sigma,
                                     half * KElem(s3) * tau};
                    KElem c[4];
                    for (int i = 0; i < 4; ++i) c[perm[i]] = vals[i];
                    units.push_back({c[0], c[1], c[2], c[3]});
                }

    if (units.size() != 120) throw math_error("icosian unit list has wrong size");
    std::set<QuatKey> keys;
    for (const Quat& u : units) {
        if (!(u.nrd() == KElem(1))) throw math_error("icosian unit with nrd != 1");
        keys.insert(key_of(u));
    }
    if (keys.size() != 120) throw math_error("icosian units are not distinct");
    for (const Quat& u : units) {
        if (!keys.count(key_of(u.conj()))) throw math_error("icosian units not closed under conj");
        for (const Quat& v : units)
            if (!keys.count(key_of(u * v))) throw math_error("icosian units not closed under mul");
    }
    return units;
}

Mat<KElem> kelem_inverse(Mat<KElem> a) {
    size_t n = a.rows();
    Mat<KElem> inv(n, n);
    for (size_t i = 0; i < n; ++i) inv.at(i, i) = KElem(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) throw math_error("singular K-matrix");
        if (p != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        KElem piv = a.at(k, k).inverse();
        for (size_t j = 0; j < n; ++j) {
            a.at(k, j) *= piv;
            inv.at(k, j) *= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            KElem f = a.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::array<KElem, 4> coords_of(const Quat& q) { return {q.w, q.x, q.y, q.z}; }

struct IcosianContext {
    IcosianLattice lattice;
    Mat<KElem> basis_inv;  // quaternion coordinates -> R-basis coordinates
};

std::array<KElem, 4> rbasis_coords(const IcosianContext& ctx, const Quat& q) {
    std::array<KElem, 4> qc = coords_of(q);
    std::array<KElem, 4> out;
    for (size_t r = 0; r < 4; ++r) {
        KElem s(0);
        for (size_t c = 0; c < 4; ++c) s += ctx.basis_inv.at(r, c) * qc[c];
        out[r] = s;
    }
    return out;
}

// matrix of a Q-linear map on the trace coordinates (basis, theta*basis)
QMat map_matrix(const IcosianContext& ctx, const std::function<Quat(const Quat&)>& f) {
    QMat m(8, 8);
    const KElem th = KElem(theta());
    for (size_t col = 0; col < 8; ++col) {
        Quat b = ctx.lattice.basis[col % 4];
        if (col >= 4) b = b * th;
        auto rc = rbasis_coords(ctx, f(b));
        for (size_t row = 0; row < 4; ++row) {
            m.at(row, col) = rc[row].a;
            m.at(4 + row, col) = rc[row].b;
        }
    }
    return m;
}

IcosianContext build_f4() {
    const std::vector<Quat>& units = icosian_units();
    // doubled units have R-integral coordinates; Hermite-reduce to a basis of 2M
    RMat gen(4, units.size());
    for (size_t c = 0; c < units.size(); ++c) {
        std::array<KElem, 4> qc = coords_of(units[c]);
        for (size_t r = 0; r < 4; ++r) {
            KElem v = qc[r] + qc[r];
            if (!is_integer(v.a) || !is_integer(v.b))
                throw math_error("doubled icosian unit is not R-integral");
            gen.at(r, c) = RElem{v.a.get_num(), v.b.get_num()};
        }
    }
    RMat h = hermite_reduce_columns(gen);

    IcosianContext ctx;
    const KElem half = KElem(make_rat(1, 2), Rat(0));
    Mat<KElem> basis_mat(4, 4);
    for (size_t j = 0; j < 4; ++j) {
        KElem c[4];
        for (size_t r = 0; r < 4; ++r) {
            c[r] = KElem(h.at(r, j)) * half;
            basis_mat.at(r, j) = c[r];
        }
        ctx.lattice.basis[j] = Quat{c[0], c[1], c[2], c[3]};
    }
    ctx.basis_inv = kelem_inverse(basis_mat);

    // every unit must have R-integral coordinates in the extracted basis
    for (const Quat& u : units) {
        auto rc = rbasis_coords(ctx, u);
        for (const KElem& v : rc)
            if (!is_integer(v.a) || !is_integer(v.b))
                throw math_error("icosian basis does not span the unit set");
    }

    RMat gram(4, 4);
    for (size_t k = 0; k < 4; ++k)
        for (size_t l = 0; l < 4; ++l) {
            KElem b = (ctx.lattice.basis[k] * ctx.lattice.basis[l].conj()).trd();
            if (!is_integer(b.a) || !is_integer(b.b))
                throw math_error("icosian Gram entry is not in R");
            gram.at(k, l) = RElem{b.a.get_num(), b.b.get_num()};
        }
    ctx.lattice.gram = RGram(std::move(gram));

    if (!is_even_unimodular(ctx.lattice.gram))
        throw math_error("icosian lattice is not even unimodular");
    if (!is_totally_positive_definite(ctx.lattice.gram))
        throw math_error("icosian lattice is not totally positive definite");
    if (!golden_check(ctx.lattice.gram, 3).golden)
        throw math_error("icosian lattice failed the golden check");
    return ctx;
}

const IcosianContext& f4_context() {
    static const IcosianContext ctx = build_f4();
    return ctx;
}

std::vector<Int> trace_coords(const IcosianContext& ctx, const Quat& q) {
    auto rc = rbasis_coords(ctx, q);
    std::vector<Int> x(8);
    for (size_t r = 0; r < 4; ++r) {
        if (!is_integer(rc[r].a) || !is_integer(rc[r].b))
            throw math_error("quaternion is not in the icosian ring");
        x[r] = rc[r].a.get_num();
        x[4 + r] = rc[r].b.get_num();
    }
    return x;
}

Quat quat_from_trace_coords(const IcosianContext& ctx, const std::vector<kernels::i32>& x) {
    Quat q{KElem(0), KElem(0), KElem(0), KElem(0)};
    const KElem th = KElem(theta());
    for (size_t r = 0; r < 4; ++r) {
        KElem c = KElem(Rat(static_cast<long>(x[r])), Rat(0)) +
                  th * KElem(Rat(static_cast<long>(x[4 + r])), Rat(0));
        q = q + ctx.lattice.basis[r] * c;
    }
    return q;
}

E8GoldenInputs build_e8_inputs() {
    const IcosianContext& ctx = f4_context();
    const std::vector<Quat>& units = icosian_units();

    E8GoldenInputs out;
    out.gram = trace_gram(ctx.lattice.gram, eta_inv());

    // an order-5 unit with trd(u) = theta
    const Quat one{KElem(1), KElem(0), KElem(0), KElem(0)};
    std::optional<Quat> u5;
    for (const Quat& u : units) {
        if (u == one || !(u.trd() == KElem(theta()))) continue;
        Quat p = u * u;
        p = p * p;
        p = p * u;  // u^5
        if (p == one) {
            u5 = u;
            break;
        }
    }
    if (!u5) throw math_error("no order-5 icosian unit found");

    QMat zq = map_matrix(ctx, [&](const Quat& q) { return *u5 * q; });
    if (!is_integral(zq)) throw math_error("left multiplication matrix is not integral");
    out.z = to_integer(zq);

    IMat z2 = out.z * out.z;
    IMat z4 = z2 * z2;
    out.T = out.z + z4;
    if (!(out.T * out.T + out.T == IMat::identity(8)))
        throw math_error("T = z + z^4 does not satisfy T^2 + T = 1");
    if (!(out.gram.g * out.T == out.T.transpose() * out.gram.g))
        throw math_error("T is not symmetric for the trace form");

    // Galois witness: phi * m * galois(x) * m^{-1} for an icosian m; searched
    // over short vectors of M and verified exactly
    const KElem ph = KElem(phi());
    std::optional<IMat> sigma;
    std::vector<Quat> candidates;
    candidates.push_back(one);
    for (const ShortVector& v : enumerate_short(out.gram, 3))
        candidates.push_back(quat_from_trace_coords(ctx, v.x));
    for (const Quat& m : candidates) {
        Quat minv = m.inverse();
        QMat sq = map_matrix(ctx, [&](const Quat& q) { return (m * q.galois() * minv) * ph; });
        if (!is_integral(sq)) continue;
        IMat s = to_integer(sq);
        if (!(s.transpose() * out.gram.g * s == out.gram.g)) continue;
        IMat lhs = s * out.T;
        IMat rhs = (-IMat::identity(8) - out.T) * s;
        if (!(lhs == rhs)) continue;
        if (!galois_check(ctx.lattice.gram, s)) continue;
        sigma = s;
        break;
    }
    if (!sigma) throw math_error("no Galois-semilinear isometry found for F4");
    out.sigma = *sigma;
    return out;
}

}  // namespace

const std::vector<Quat>& icosian_units() {
    static const std::vector<Quat> units = build_units();
    return units;
}

const IcosianLattice& f4() { return f4_context().lattice; }

std::vector<Int> icosian_trace_coords(const Quat& q) { return trace_coords(f4_context(), q); }

Quat icosian_from_trace_coords(const std::vector<Int>& x) {
    std::vector<kernels::i32> xi(x.size());
    for (size_t i = 0; i < x.size(); ++i) xi[i] = static_cast<kernels::i32>(to_i64(x[i]));
    return quat_from_trace_coords(f4_context(), xi);
}

bool icosian_contains(const Quat& q) {
    auto rc = rbasis_coords(f4_context(), q);
    for (const KElem& v : rc)
        if (!is_integer(v.a) || !is_integer(v.b)) return false;
    return true;
}

QMat icosian_map_matrix(const std::function<Quat(const Quat&)>& f) {
    return map_matrix(f4_context(), f);
}

RGram f4_perp_f4() { return orthogonal_sum(f4().gram, f4().gram); }

const E8GoldenInputs& e8_golden_inputs() {
    static const E8GoldenInputs inputs = build_e8_inputs();
    return inputs;
}

std::vector<std::string> validate_golden_candidate(const GoldenCandidate& c) {
    std::vector<std::string> problems;
    size_t m = c.gram.dim();
    if (m == 0) {
        problems.push_back("empty Gram matrix");
        return problems;
    }
    if (m % 2 != 0) problems.push_back("rank is not divisible by 2 under the T-action");
    if (c.T.rows() != m || c.T.cols() != m) {
        problems.push_back("T has the wrong shape");
        return problems;
    }
    if (!(c.T * c.T + c.T == IMat::identity(m)))
        problems.push_back("T does not satisfy the minimal polynomial X^2 + X - 1");
    if (!(c.gram.g * c.T == c.T.transpose() * c.gram.g))
        problems.push_back("T is not symmetric with respect to the form");
    if (!c.gram.is_even()) problems.push_back("lattice is not even");
    Int d = c.gram.det();
    if (d != 1 && d != -1) problems.push_back("lattice is not unimodular");
    if (!c.gram.positive_definite()) problems.push_back("form is not positive definite");
    if (c.sigma) {
        const IMat& s = *c.sigma;
        if (s.rows() != m || s.cols() != m) {
            problems.push_back("sigma has the wrong shape");
            return problems;
        }
        if (!(s.transpose() * c.gram.g * s == c.gram.g))
            problems.push_back("sigma is not an isometry");
        if (!(s * c.T == (-IMat::identity(m) - c.T) * s))
            problems.push_back("sigma does not conjugate T to -1-T");
    }
    return problems;
}

}  // namespace golden
