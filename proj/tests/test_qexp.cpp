#include <doctest.h>

#include <golden/qexp.hpp>

#include <random>

using namespace golden;

namespace {

QExp random_series(std::mt19937& rng, long prec, bool nonneg = false) {
    std::uniform_int_distribution<int> num(nonneg ? 0 : -8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> keep(0, 2);
    QExp f(prec);
    f.set(0, 0, 1);
    for (long i = 1; i <= prec; ++i)
        for (long j : valid_js(i))
            if (keep(rng) == 0) f.set(i, j, make_rat(num(rng), den(rng)));
    return f;
}

}  // namespace

TEST_CASE("multiplication is index-wise convolution") {
    QExp f(3);
    f.set(0, 0, 1);
    f.set(1, 2, 120);
    QExp g = f * f;
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.coeff(1, 2) == 240);
    CHECK(g.coeff(2, 4) == 14400);
    CHECK(g.coeff(1, 3) == 0);

    CHECK(f * QExp::one(3) == f);
}

TEST_CASE("invalid indices are rejected") {
    QExp f(3);
    CHECK_THROWS_AS(f.set(1, 1, 1), math_error);
    CHECK_THROWS_AS(f.set(1, 4, 1), math_error);
    CHECK_THROWS_AS(f.set(4, 8, 1), math_error);  // beyond precision
    CHECK_NOTHROW(f.set(1, 2, 1));
    CHECK_NOTHROW(f.set(2, 7, 1));
}

TEST_CASE("valuation") {
    QExp f(4);
    f.set(0, 0, 1);
    f.set(2, 5, make_rat(1, 4));
    f.set(3, 7, -2);
    REQUIRE(f.nu().has_value());
    CHECK(*f.nu() == IndexPair{0, 0});
    CHECK(*f.nu_minus_constant() == IndexPair{2, 5});
    CHECK_FALSE((f - f).nu().has_value());
}

TEST_CASE("restrictions to one variable") {
    QExp f(2);
    f.set(0, 0, 1);
    f.set(1, 2, 3);
    f.set(1, 3, 4);
    f.set(2, 4, 5);
    auto rows = f.restrict_q1();
    CHECK(rows[0] == 1);
    CHECK(rows[1] == 7);
    CHECK(rows[2] == 5);

    auto cols = f.restrict_q0();
    CHECK(cols.at(0) == 1);
    CHECK(cols.at(2) == 3);
    CHECK(cols.at(3) == 4);
    // column 4 needs (2,4) only; complete at prec 2
    CHECK(cols.at(4) == 5);
    // column 7 would need (2,7) and (3,7), (4,7)... not complete at prec 2
    CHECK(cols.find(7) == cols.end());
}

TEST_CASE("symmetry and unit invariance checks") {
    QExp f(2);
    f.set(1, 3, 7);
    CHECK_FALSE(f.check_symmetric());
    f.set(2, 3, 7);  // partner of (1,3) under (i,j) -> (j-i,j)
    CHECK(f.check_symmetric());

    QExp g(4);
    g.set(2, 4, 9);
    CHECK_FALSE(g.check_unit_invariant());
    g.set(4, 6, 9);  // image of (2,4) under (i,j) -> (4i-j, 5i-j)
    CHECK_FALSE(g.check_unit_invariant());  // (2,6) maps to (2,4) but is 0
    g.set(2, 6, 9);
    g.set(4, 14, 9);  // pre-image of (2,6); completes the orbit within the window
    CHECK(g.check_unit_invariant());
}

TEST_CASE("product valuation bound for non-negative series") {
    std::mt19937 rng(41);
    for (int it = 0; it < 40; ++it) {
        QExp f = random_series(rng, 5, true);
        QExp g = random_series(rng, 5, true);
        QExp p = f * g;
        auto nf = f.nu_minus_constant();
        auto ng = g.nu_minus_constant();
        auto np = p.nu_minus_constant();
        if (!nf && !ng) {
            CHECK_FALSE(np.has_value());
            continue;
        }
        IndexPair lo = !nf ? *ng : (!ng ? *nf : std::min(*nf, *ng));
        if (np) CHECK(*np >= lo);
    }
}

TEST_CASE("truncation commutes with multiplication") {
    std::mt19937 rng(43);
    for (int it = 0; it < 25; ++it) {
        QExp f = random_series(rng, 6);
        QExp g = random_series(rng, 6);
        QExp full = f * g;
        QExp f3(3), g3(3);
        for (const auto& [idx, c] : f.coeffs())
            if (idx.i <= 3) f3.set(idx.i, idx.j, c);
        for (const auto& [idx, c] : g.coeffs())
            if (idx.i <= 3) g3.set(idx.i, idx.j, c);
        QExp small = f3 * g3;
        for (const auto& [idx, c] : small.coeffs()) CHECK(c == full.coeff(idx.i, idx.j));
        for (const auto& [idx, c] : full.coeffs())
            if (idx.i <= 3) CHECK(c == small.coeff(idx.i, idx.j));
    }
}

TEST_CASE("commutativity and associativity up to truncation") {
    std::mt19937 rng(47);
    QExp f = random_series(rng, 4);
    QExp g = random_series(rng, 4);
    QExp h = random_series(rng, 4);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
}

TEST_CASE("dump and parse round-trip bit-exactly") {
    std::mt19937 rng(53);
    for (int it = 0; it < 20; ++it) {
        QExp f = random_series(rng, 5);
        QExp g = QExp::parse(f.dump());
        CHECK(g == f);
        CHECK(g.dump() == f.dump());
    }
    CHECK_THROWS_AS(QExp::parse("not a dump"), math_error);
}
