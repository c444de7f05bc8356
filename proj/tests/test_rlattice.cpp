#include <doctest.h>

#include <golden/icosian.hpp>

using namespace golden;

namespace {

const RGram& f4g() {
    static const RGram g = f4().gram;
    return g;
}

}  // namespace

TEST_CASE("even unimodular predicate") {
    CHECK(is_even_unimodular(f4g()));
    CHECK(is_totally_positive_definite(f4g()));

    // doubling destroys unimodularity
    RMat twice = f4g().g;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) twice.at(i, j) = twice.at(i, j) * RElem(2);
    CHECK_FALSE(is_even_unimodular(RGram(twice)));

    // a diagonal entry outside 2R breaks evenness
    RMat odd = f4g().g;
    odd.at(0, 0) = RElem{2, 1};
    CHECK_FALSE(is_even_unimodular(RGram(odd)));
}

TEST_CASE("trace lattices of F4") {
    ZGram e8 = trace_gram(f4g(), eta_inv());
    CHECK(e8.dim() == 8);
    CHECK(e8.is_even());
    CHECK(e8.det() == 1);
    CHECK(minimum_norm2(e8) == 2);
    CHECK(theta_counts(e8, 2)[2] == 240);

    ZGram l1 = trace_gram(f4g(), KElem(1));
    CHECK(l1.det() == 625);  // 5^4
    CHECK(minimum_norm2(l1) == 4);
    CHECK(theta_counts(l1, 4)[4] == 120);

    // duals: E8 self-dual; 5 * l1^{-1} integral
    CHECK(is_integral(e8.dual_basis_matrix()));
    QMat d1 = l1.dual_basis_matrix();
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) d1.at(i, j) *= 5;
    CHECK(is_integral(d1));

    CHECK_THROWS_AS(trace_gram(f4g(), KElem(theta())), math_error);  // not totally positive
}

TEST_CASE("theta of F4 equals the Eisenstein series") {
    QExp th = hilbert_theta(f4g(), 4);
    CHECK(th == eisenstein(2, 4));
    CHECK(th.coeff(1, 2) == 120);
    CHECK(th.check_symmetric());
    CHECK(th.check_unit_invariant());
    auto rows = th.restrict_q1();
    auto e4 = elliptic_e4(4);
    for (long n = 0; n <= 4; ++n) CHECK(rows[n] == e4[n]);
    // restrict_q0 gives the L_1 theta: coefficient 120 at exponent 2
    CHECK(th.restrict_q0().at(2) == 120);
}

TEST_CASE("golden checks") {
    auto rep = golden_check(f4g(), 3);
    CHECK(rep.golden);
    CHECK(rep.min_eta == 1);
    CHECK(rep.min_one == 2);
    CHECK(rep.extremal_bound == 1);
    CHECK(rep.meets_extremal_bound);

    auto rep2 = golden_check(f4_perp_f4(), 3);
    CHECK(rep2.golden);

    RMat twice = f4g().g;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) twice.at(i, j) = twice.at(i, j) * RElem(2);
    auto bad = golden_check(RGram(twice), 3);
    CHECK_FALSE(bad.golden);
}

TEST_CASE("theta multiplicativity under orthogonal sums") {
    QExp t1 = hilbert_theta(f4g(), 3);
    QExp t2 = hilbert_theta(f4_perp_f4(), 3);
    CHECK(t2 == t1 * t1);
    // identity element
    RGram empty;
    CHECK(orthogonal_sum(f4g(), empty).g == f4g().g);
}

TEST_CASE("goldenex extracts the structure that built the trace form") {
    const E8GoldenInputs& in = e8_golden_inputs();
    GoldenStructure gs = goldenex(in.gram, in.T);
    CHECK(gs.gram.rank() == 4);
    CHECK(is_even_unimodular(gs.gram));
    CHECK(hilbert_theta(gs.gram, 4) == eisenstein(2, 4));

    // the recorded basis change transports the input form exactly
    ZGram back = trace_gram(gs.gram, eta_inv());
    CHECK(back.g == gs.basis_change.transpose() * in.gram.g * gs.basis_change);

    // violated preconditions are rejected
    CHECK_THROWS_AS(goldenex(in.gram, IMat::identity(8)), math_error);
    IMat t_bad = in.T;
    t_bad.at(0, 1) += 1;
    CHECK_THROWS_AS(goldenex(in.gram, t_bad), math_error);
}

TEST_CASE("galois symmetry witness") {
    const E8GoldenInputs& in = e8_golden_inputs();
    CHECK(galois_check(f4g(), in.sigma));
    CHECK(galois_check(f4g(), -in.sigma));  // Q is quadratic
    // the identity is an isometry but not a Galois witness
    CHECK_FALSE(galois_check(f4g(), IMat::identity(8)));
}

TEST_CASE("modular families of F4") {
    for (long a = 0; a <= 2; ++a) {
        FamilyCertificate c = modular_family(f4g(), a, 20.0);
        CHECK(c.p == a * a + 5 * a + 5);
        CHECK(c.det_ok);
        CHECK(c.min_ok);
        CHECK(c.min_q == 2 + a);
        CHECK(c.modularity.status == ModularStatus::yes);
        REQUIRE(c.modularity.witness.has_value());
    }
    FamilyCertificate c0 = modular_family(f4g(), 0, 20.0);
    CHECK(c0.kissing == 120);
    CHECK(c0.min_q == 2);  // extremal 5-modular: 1 + floor(8/8)
}

TEST_CASE("trace identities hold on basis vectors and short vectors") {
    CHECK(trace_identity_check(f4g()));
    CHECK(trace_identity_check(f4_perp_f4()));
}

TEST_CASE("minimum bounds 2 min(L_eta) <= min(L_1) <= 5/2 min(L_eta)") {
    for (const RGram* g : {&f4g()}) {
        auto rep = golden_check(*g, 3);
        CHECK(2 * rep.min_eta <= rep.min_one);
        CHECK(2 * rep.min_one <= 5 * rep.min_eta);
    }
}

TEST_CASE("hermite reduction over R") {
    // the span of (column) generators is preserved: reduce a rank-2 module
    RMat w(2, 3);
    w.at(0, 0) = RElem{2, 0};
    w.at(0, 1) = RElem{0, 1};
    w.at(0, 2) = RElem{1, 1};
    w.at(1, 0) = RElem{0, 0};
    w.at(1, 1) = RElem{3, 0};
    w.at(1, 2) = RElem{0, 3};
    RMat h = hermite_reduce_columns(w);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 2);
    CHECK(h.at(0, 1).is_zero());  // lower triangular: zeros right of each pivot
    // pivots are canonical associates
    CHECK(h.at(0, 0) == canonical_associate(h.at(0, 0)));
    CHECK(h.at(1, 1) == canonical_associate(h.at(1, 1)));
    // determinant has the same ideal as the 2x2 minors' gcd (span preserved):
    // gcd of minors of w equals unit times det(h)
    RElem d = rdet(h);
    RElem m01 = w.at(0, 0) * w.at(1, 1) - w.at(0, 1) * w.at(1, 0);
    RElem m02 = w.at(0, 0) * w.at(1, 2) - w.at(0, 2) * w.at(1, 0);
    RElem m12 = w.at(0, 1) * w.at(1, 2) - w.at(0, 2) * w.at(1, 1);
    RElem gg = gcd(gcd(m01, m02), m12);
    CHECK(is_unit(exact_div(gg, d)));
}

TEST_CASE("trace determinant identity det L_eta = N(det g)") {
    // doubling the Gram: det over R picks up 2^4, norms to 2^8 = 256
    RMat twice = f4g().g;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) twice.at(i, j) = twice.at(i, j) * RElem(2);
    RGram g2(twice);
    ZGram t = trace_gram(g2, eta_inv());
    CHECK(t.det() == rdet(g2.g).norm());
    CHECK(t.det() == 256);
    CHECK(trace_gram(f4g(), eta_inv()).det() == abs(rdet(f4g().g).norm()));
}

TEST_CASE("restrict_q0 of theta matches direct enumeration of L_1") {
    QExp th = hilbert_theta(f4g(), 3);
    ZGram l1 = trace_gram(f4g(), KElem(1));
    auto cols = th.restrict_q0();
    auto counts = theta_counts(l1, 2 * 4);
    for (const auto& [j, sum] : cols) {
        if (j == 0 || j > 4) continue;  // columns complete well inside prec 3
        kernels::i64 expect = counts.count(2 * j) ? counts[2 * j] : 0;
        CHECK(sum == expect);
    }
}

TEST_CASE("goldenex records and validates the source isometry") {
    const E8GoldenInputs& in = e8_golden_inputs();
    GoldenStructure gs = goldenex(in.gram, in.T, in.z);
    REQUIRE(gs.z_source.has_value());
    CHECK(*gs.z_source == in.z);
    // a non-order-5 source is rejected
    CHECK_THROWS_AS(goldenex(in.gram, in.T, IMat::identity(8)), math_error);
}

TEST_CASE("left multiplication by icosian units preserves the trace form") {
    ZGram te = trace_gram(f4().gram, eta_inv());
    const auto& units = icosian_units();
    for (size_t idx : {size_t(3), size_t(42), size_t(99)}) {
        const Quat& u = units[idx];
        QMat mq = icosian_map_matrix([&](const Quat& q) { return u * q; });
        REQUIRE(is_integral(mq));
        IMat mi = to_integer(mq);
        CHECK(mi.transpose() * te.g * mi == te.g);
    }
}

TEST_CASE("rank-16 family member certifies 5-modularity") {
    FamilyCertificate c = modular_family(f4_perp_f4(), 0, 60.0);
    CHECK(c.p == 5);
    CHECK(c.det_ok);
    CHECK(c.min_q == 2);
    CHECK(c.kissing == 240);  // the weight-4 row's s_1
    CHECK(c.modularity.status == ModularStatus::yes);
}
