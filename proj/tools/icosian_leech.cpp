// Derives import data for the rank-12 golden structure on the Leech lattice
// from the icosian congruence construction: sublattices of M^3 cut out by
// congruences modulo an ideal above sqrt(5), rescaled by eta^-1. Every
// candidate is verified exactly (even unimodular over R, trace determinant 1,
// minimum 2, 196560 minimal vectors) before anything is written; the unique
// even unimodular rank-24 lattice of minimum 2 is the Leech lattice.

#include <golden/serialize.hpp>

#include <iostream>
#include <random>

using namespace golden;

namespace {

RMat block3(const RMat& g) {
    size_t n = g.rows();
    RMat out(3 * n, 3 * n);
    for (size_t f = 0; f < 3; ++f)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) out.at(f * n + i, f * n + j) = g.at(i, j);
    return out;
}

// D rows demanding x-y, y-z in the ideal (via map A) and x+y+z in the sum
// ideal (via map B)
QMat stack_conditions(const QMat& a, const QMat& b) {
    QMat d(24, 24);
    for (size_t r = 0; r < 8; ++r)
        for (size_t c = 0; c < 8; ++c) {
            d.at(r, c) = a.at(r, c);
            d.at(r, 8 + c) = -a.at(r, c);
            d.at(8 + r, 8 + c) = a.at(r, c);
            d.at(8 + r, 16 + c) = -a.at(r, c);
            d.at(16 + r, c) = b.at(r, c);
            d.at(16 + r, 8 + c) = b.at(r, c);
            d.at(16 + r, 16 + c) = b.at(r, c);
        }
    return d;
}

struct Candidate {
    RGram gram12;
    ZGram trace24;
};

std::optional<Candidate> try_conditions(const QMat& a, const QMat& b) {
    QMat d = stack_conditions(a, b);
    IMat v = integral_preimage_basis(d);
    Int idx = abs(det(v));
    if (idx != ipow(Int(5), 6)) return std::nullopt;

    // columns of v as R-coordinates with respect to the M^3 basis
    RMat rcoords(12, 24);
    for (size_t col = 0; col < 24; ++col)
        for (size_t f = 0; f < 3; ++f)
            for (size_t r = 0; r < 4; ++r)
                rcoords.at(4 * f + r, col) = RElem{v.at(8 * f + r, col), v.at(8 * f + 4 + r, col)};
    RMat h = hermite_reduce_columns(rcoords);

    RMat g3 = block3(f4().gram.g);
    RMat raw = h.transpose() * g3 * h;

    // rescale the form by eta^-1; integrality decides whether the congruences
    // produced a genuine unimodular R-lattice
    RMat scaled(12, 12);
    for (size_t i = 0; i < 12; ++i)
        for (size_t j = 0; j < 12; ++j) {
            KElem e = eta_inv() * KElem(raw.at(i, j));
            if (!is_integer(e.a) || !is_integer(e.b)) return std::nullopt;
            scaled.at(i, j) = RElem{e.a.get_num(), e.b.get_num()};
        }
    RGram g12(std::move(scaled));
    if (!is_even_unimodular(g12)) return std::nullopt;
    if (!is_totally_positive_definite(g12)) return std::nullopt;

    ZGram t24 = trace_gram(g12, eta_inv());
    if (t24.det() != 1) return std::nullopt;
    // minimum 2 in the q convention: even with no vectors of norm2 = 2
    if (!enumerate_norm2(t24, 2).empty()) return std::nullopt;
    return Candidate{std::move(g12), std::move(t24)};
}

// deterministic small unimodular change of basis to decouple the emitted data
// from the construction basis
IMat scramble(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    IMat u = IMat::identity(n);
    for (int step = 0; step < 200; ++step) {
        size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long c = static_cast<long>(rng() % 3) - 1;
        if (c == 0) continue;
        for (size_t r = 0; r < n; ++r) u.at(r, j) += Int(c) * u.at(r, i);
    }
    return u;
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/leech_golden.json";

    ZGram e8 = trace_gram(f4().gram, eta_inv());
    std::vector<Quat> ws;
    size_t eta_count = 0, etabar_count = 0;
    for (const ShortVector& sv : enumerate_short(e8, 3)) {
        std::vector<Int> x(sv.x.begin(), sv.x.end());
        Quat q = icosian_from_trace_coords(x);
        KElem n = q.nrd();
        if (n == KElem(eta()) && eta_count < 4) {
            ws.push_back(q);
            ++eta_count;
        } else if (n == KElem(eta_bar()) && etabar_count < 4) {
            ws.push_back(q);
            ++etabar_count;
        }
        if (ws.size() >= 8) break;
    }
    std::cout << "sqrt5-norm candidates: " << ws.size() << std::endl;

    // membership maps for every candidate and side
    std::vector<QMat> left(ws.size(), QMat()), right(ws.size(), QMat());
    for (size_t i = 0; i < ws.size(); ++i) {
        Quat winv = ws[i].inverse();
        left[i] = icosian_map_matrix([&](const Quat& q) { return winv * q; });
        right[i] = icosian_map_matrix([&](const Quat& q) { return q * winv; });
    }

    size_t tried = 0;
    for (size_t wi = 0; wi < ws.size(); ++wi) {
        for (int aside = 0; aside < 2; ++aside) {
            const QMat& a = aside == 0 ? left[wi] : right[wi];
            for (size_t bi = 0; bi < ws.size(); ++bi) {
                for (int bside = 0; bside < 2; ++bside) {
                    const QMat& b = bside == 0 ? left[bi] : right[bi];
                    ++tried;
                    auto cand = try_conditions(a, b);
                    if (!cand) continue;
                    std::cout << "hit: diff w#" << wi << (aside ? " right" : " left") << ", sum w#"
                              << bi << (bside ? " right" : " left") << " after " << tried
                              << " tries" << std::endl;
                    auto counts = theta_counts(cand->trace24, 4);
                    std::cout << "  kissing number " << counts[4] << std::endl;
                    if (counts[4] != 196560) continue;

                    auto rep = golden_check(cand->gram12, 2);
                    std::cout << "  golden check: " << (rep.golden ? "true" : "false")
                              << std::endl;
                    if (!rep.golden) continue;

                    IMat u = scramble(24, 20260808);
                    IMat gram = u.transpose() * cand->trace24.g * u;
                    IMat uinv = to_integer(inverse(u));
                    IMat t = uinv * theta_action(12) * u;

                    GoldenCandidate out{ZGram(gram), t, std::nullopt, "leech-icosian"};
                    auto problems = validate_golden_candidate(out);
                    if (!problems.empty()) {
                        for (const auto& p : problems) std::cout << "  problem: " << p << "\n";
                        continue;
                    }
                    save_text_file(out_path, golden_candidate_to_json(out).dump(2) + "\n");
                    std::cout << "wrote " << out_path << "\n";
                    return 0;
                }
            }
        }
    }
    std::cout << "no variant produced the Leech structure (" << tried << " tried)\n";
    return 1;
}
