#include <doctest.h>

#include <golden/hmf.hpp>

using namespace golden;

TEST_CASE("elliptic reference series") {
    auto e4 = elliptic_e4(8);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    CHECK(e4[3] == 6720);
    CHECK(e4[8] == 140400);

    auto d = elliptic_delta(8);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
    CHECK(d[5] == 4830);
}

TEST_CASE("weight-2 Eisenstein series") {
    QExp a2 = eisenstein(2, 4);
    CHECK(a2.coeff(0, 0) == 1);
    CHECK(a2.coeff(1, 2) == 120);
    CHECK(a2.coeff(2, 4) == 600);   // sigma_1((2)) = 5
    CHECK(a2.coeff(2, 5) == 720);   // sigma_1((eta)) = 6
    CHECK(a2.row_sum(2) == 2160);   // matches E4
    CHECK(*a2.nu_minus_constant() == IndexPair{1, 2});
    CHECK(a2.check_symmetric());
    CHECK(a2.check_unit_invariant());

    // A2^2 row sum at i=1 equals 480
    QExp sq = a2 * a2;
    CHECK(sq.row_sum(1) == 480);
}

TEST_CASE("eisenstein restriction equals E4 throughout") {
    QExp a2 = eisenstein(2, 6);
    auto rows = a2.restrict_q1();
    auto e4 = elliptic_e4(6);
    for (long n = 0; n <= 6; ++n) CHECK(rows[n] == e4[n]);
}

TEST_CASE("generator set normalizations") {
    const GeneratorSet& g = generators(5);
    CHECK(g.B6.coeff(1, 2) == make_rat(1, 2));
    CHECK(*g.B6.nu() == IndexPair{1, 2});
    CHECK(*g.C10.nu() == IndexPair{2, 4});
    CHECK(g.C10.coeff(2, 4) == make_rat(1, 4));

    auto rB6 = g.B6.restrict_q1();
    auto delta = elliptic_delta(5);
    for (long n = 0; n <= 5; ++n) CHECK(rB6[n] == delta[n]);
    for (const Rat& c : g.C10.restrict_q1()) CHECK(c == 0);

    QExp x12 = (g.A2 * g.C10 - g.B6 * g.B6) * make_rat(1, 4);
    CHECK(*x12.nu() == IndexPair{2, 5});
}

TEST_CASE("restriction is a ring homomorphism on computed forms") {
    const GeneratorSet& g = generators(4);
    QExp prod = g.A2 * g.B6;
    auto r = prod.restrict_q1();
    auto ra = g.A2.restrict_q1();
    auto rb = g.B6.restrict_q1();
    for (long n = 0; n <= 4; ++n) {
        Rat conv = 0;
        for (long k = 0; k <= n; ++k) conv += ra[k] * rb[n - k];
        CHECK(r[n] == conv);
    }
}

TEST_CASE("monomial bases") {
    CHECK(monomial_exponents(2).size() == 1);
    CHECK(monomial_exponents(4).size() == 1);
    CHECK(monomial_exponents(10).size() == 3);
    CHECK(monomial_exponents(30).size() == 13);
    CHECK_THROWS_AS(monomial_exponents(3), math_error);
}

TEST_CASE("extremal forms of one-dimensional weight") {
    const GeneratorSet& g = generators(4);
    ExtremalResult r2 = extremal_form(2, 4);
    CHECK(r2.form == g.A2);
    CHECK(r2.s == 1);
    CHECK(r2.t == 2);
    CHECK(r2.s_eta == 240);
    CHECK(r2.s_one == 120);
    CHECK(r2.pm == PmClass::plus);
    CHECK(r2.unique);

    ExtremalResult r4 = extremal_form(4, 4);
    CHECK(r4.form == g.A2 * g.A2);
    CHECK(r4.s_eta == 480);
    CHECK(r4.s_one == 240);
}

TEST_CASE("extremal form of weight 6 reproduces the Leech counts") {
    ExtremalResult r = extremal_form(6, 5);
    CHECK(r.s == 2);
    CHECK(r.t == 4);
    CHECK(r.s_eta == 196560);
    CHECK(r.s_one == 37800);
    CHECK(r.pm == PmClass::plus);
    CHECK(r.unique);
    CHECK(r.form.check_symmetric());
    CHECK(r.form.check_unit_invariant());
}

TEST_CASE("weight 10 has the flipped minimal-vector ratio") {
    ExtremalResult r = extremal_form(10, 5);
    CHECK(r.s == 2);
    CHECK(r.t == 5);
    CHECK(r.s_eta == 39600);
    CHECK(r.s_one == 79200);
    CHECK(r.s_one == 2 * r.s_eta);
    CHECK(r.pm == PmClass::minus);
}

TEST_CASE("nu bound of Proposition") {
    ExtremalResult r10 = extremal_form(10, 5);
    CHECK(check_nu_bound(r10));  // (2,5): 4 <= 5 <= 5
    ExtremalResult r6 = extremal_form(6, 5);
    CHECK(check_nu_bound(r6));   // (2,4): 4 <= 4 <= 5

    ExtremalResult fake;
    fake.weight = 16;
    fake.s = 3;
    fake.t = 7;
    CHECK(check_nu_bound(fake)); // 6 <= 7 <= 7
    fake.t = 8;
    CHECK_FALSE(check_nu_bound(fake));
    fake.s = 4;
    fake.t = 8;
    CHECK_FALSE(check_nu_bound(fake));  // s' > 1 + floor(16/6)
}

TEST_CASE("insufficient precision is reported") {
    CHECK_THROWS_AS(extremal_form(30, 4), precision_error);
}

TEST_CASE("full table reproduction at precision 8") {
    auto diffs = table_reproduce(8);
    for (const auto& d : diffs) {
        for (const auto& m : d.mismatches) {
            CAPTURE(m);
            CHECK(d.mismatches.empty());
        }
        CHECK(check_nu_bound(d.computed));
        CHECK(d.computed.form.check_symmetric());
        CHECK(d.computed.form.check_unit_invariant());
    }
}

TEST_CASE("table reproduction is thread-count independent") {
    auto seq = table_reproduce(7, 1);
    auto par = table_reproduce(7, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t k = 0; k < seq.size(); ++k) {
        CHECK(seq[k].computed.form == par[k].computed.form);
        CHECK(seq[k].mismatches == par[k].mismatches);
    }
}
