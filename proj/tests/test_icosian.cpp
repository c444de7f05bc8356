#include <doctest.h>

#include <golden/icosian.hpp>

#include <algorithm>
#include <random>

using namespace golden;

TEST_CASE("icosian unit group") {
    const auto& units = icosian_units();
    CHECK(units.size() == 120);  // closure is verified at construction
    for (const Quat& u : units) CHECK(u.nrd() == KElem(1));

    KElem half = KElem(make_rat(1, 2), Rat(0));
    Quat h{half, half, half, half};
    Quat prod = h * h.conj();
    CHECK(prod == Quat{KElem(1), KElem(0), KElem(0), KElem(0)});
}

TEST_CASE("quaternion arithmetic") {
    Quat i{KElem(0), KElem(1), KElem(0), KElem(0)};
    Quat j{KElem(0), KElem(0), KElem(1), KElem(0)};
    Quat k{KElem(0), KElem(0), KElem(0), KElem(1)};
    CHECK(i * i == Quat{KElem(-1), KElem(0), KElem(0), KElem(0)});
    CHECK(i * j == k);
    CHECK(j * i == Quat{KElem(0), KElem(0), KElem(0), KElem(-1)});

    std::mt19937 rng(83);
    const auto& units = icosian_units();
    for (int it = 0; it < 100; ++it) {
        const Quat& a = units[rng() % units.size()];
        const Quat& b = units[rng() % units.size()];
        CHECK((a * b).nrd() == a.nrd() * b.nrd());
        CHECK(a * a.inverse() == Quat{KElem(1), KElem(0), KElem(0), KElem(0)});
    }
}

TEST_CASE("F4 is the rank-4 golden lattice") {
    const IcosianLattice& L = f4();
    CHECK(L.gram.rank() == 4);
    CHECK(is_unit(rdet(L.gram.g)));
    CHECK(golden_check(L.gram, 3).golden);
    CHECK(hilbert_theta(L.gram, 3) == extremal_form(2, 3).form);
}

TEST_CASE("F4 perp F4 matches the weight-4 table row") {
    RGram g = f4_perp_f4();
    QExp th = hilbert_theta(g, 3);
    ExtremalResult r = extremal_form(4, 3);
    CHECK(th == r.form);
    CHECK(r.s_eta == 480);
    CHECK(r.s_one == 240);
    CHECK(r.pm == PmClass::plus);
}

TEST_CASE("E8 golden inputs") {
    const E8GoldenInputs& in = e8_golden_inputs();
    CHECK(in.T * in.T + in.T == IMat::identity(8));
    // z has order 5
    IMat z2 = in.z * in.z;
    IMat z5 = z2 * z2 * in.z;
    CHECK(z5 == IMat::identity(8));
    CHECK_FALSE(in.z == IMat::identity(8));
    // sigma conjugates the theta action to its Galois twist
    CHECK(in.sigma * in.T == (-IMat::identity(8) - in.T) * in.sigma);
    CHECK(galois_check(f4().gram, in.sigma));
}

TEST_CASE("f4 basis is pivot-order independent up to equivalence") {
    // rebuild with the generator columns reversed; theta and determinant agree
    const auto& units = icosian_units();
    RMat gen(4, units.size());
    for (size_t c = 0; c < units.size(); ++c) {
        const Quat& u = units[units.size() - 1 - c];
        KElem qc[4] = {u.w + u.w, u.x + u.x, u.y + u.y, u.z + u.z};
        for (size_t r = 0; r < 4; ++r) gen.at(r, c) = RElem{qc[r].a.get_num(), qc[r].b.get_num()};
    }
    RMat h = hermite_reduce_columns(gen);
    KElem half = KElem(make_rat(1, 2), Rat(0));
    std::array<Quat, 4> basis;
    for (size_t j = 0; j < 4; ++j) {
        KElem c[4];
        for (size_t r = 0; r < 4; ++r) c[r] = KElem(h.at(r, j)) * half;
        basis[j] = Quat{c[0], c[1], c[2], c[3]};
    }
    RMat gram(4, 4);
    for (size_t k = 0; k < 4; ++k)
        for (size_t l = 0; l < 4; ++l) {
            KElem b = (basis[k] * basis[l].conj()).trd();
            REQUIRE(is_integer(b.a));
            REQUIRE(is_integer(b.b));
            gram.at(k, l) = RElem{b.a.get_num(), b.b.get_num()};
        }
    RGram g2(std::move(gram));
    CHECK(is_even_unimodular(g2));
    CHECK(hilbert_theta(g2, 3) == hilbert_theta(f4().gram, 3));
    CHECK(is_unit(rdet(g2.g)));
}

TEST_CASE("unit rescaling leaves the theta series unchanged") {
    RMat scaled = f4().gram.g;
    RElem t2 = theta_sq();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) scaled.at(i, j) = scaled.at(i, j) * t2;
    RGram g2(std::move(scaled));
    CHECK(is_even_unimodular(g2));
    CHECK(hilbert_theta(g2, 3) == hilbert_theta(f4().gram, 3));
}

TEST_CASE("golden candidate validation") {
    const E8GoldenInputs& in = e8_golden_inputs();
    GoldenCandidate good{in.gram, in.T, in.sigma, "e8"};
    CHECK(validate_golden_candidate(good).empty());

    // a T with a fixed vector fails the minimal-polynomial check
    GoldenCandidate fixed{in.gram, IMat::identity(8), std::nullopt, "bad"};
    auto problems = validate_golden_candidate(fixed);
    CHECK_FALSE(problems.empty());

    // odd rank cannot carry a Z[theta]-structure
    IMat o(3, 3);
    for (size_t i = 0; i < 3; ++i) o.at(i, i) = 2;
    GoldenCandidate odd{ZGram(o), IMat::identity(3), std::nullopt, "odd"};
    auto podd = validate_golden_candidate(odd);
    bool has_rank_problem = false;
    for (const auto& p : podd) has_rank_problem |= p.find("rank") != std::string::npos;
    CHECK(has_rank_problem);

    // wrong sigma is reported
    GoldenCandidate badsig{in.gram, in.T, IMat::identity(8), "badsig"};
    auto ps = validate_golden_candidate(badsig);
    CHECK_FALSE(ps.empty());
}
