#pragma once

#include <golden/rgram.hpp>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace golden {

// Quaternion w + xi + yj + zk over K, i^2 = j^2 = -1, ij = k.
struct Quat {
    KElem w, x, y, z;

    Quat() = default;
    Quat(KElem w_, KElem x_, KElem y_, KElem z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool operator==(const Quat& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }

    Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quat operator*(const Quat& o) const;
    Quat operator*(const KElem& c) const { return {w * c, x * c, y * c, z * c}; }

    Quat conj() const { return {w, -x, -y, -z}; }
    KElem nrd() const { return w * w + x * x + y * y + z * z; }
    KElem trd() const { return w + w; }

    // coordinate-wise Galois conjugation (a ring automorphism of the algebra)
    Quat galois() const { return {w.conj(), x.conj(), y.conj(), z.conj()}; }

    Quat inverse() const;
};

// The 120 icosian units (the group SL_2(5)), verified closed under
// multiplication with reduced norm 1.
const std::vector<Quat>& icosian_units();

struct IcosianLattice {
    RGram gram;                 // polar form of Q = nrd on the R-basis
    std::array<Quat, 4> basis;  // R-basis of the icosian ring
};

// The unique golden lattice of rank 4, built from the icosian maximal order.
const IcosianLattice& f4();

RGram f4_perp_f4();

struct E8GoldenInputs {
    ZGram gram;   // trace_gram(f4, eta^-1): the E8 form on (basis, theta*basis)
    IMat z;       // left multiplication by an order-5 icosian unit
    IMat T;       // z + z^4, satisfies T^2 + T = 1
    IMat sigma;   // Galois-semilinear isometry witness
};

// Inputs for the goldenex round trip on E8, with the Galois witness found by
// exact search over M and verified by galois_check.
const E8GoldenInputs& e8_golden_inputs();

// Coordinates in the F4 trace basis (w_1..w_4, theta w_1..theta w_4);
// throws unless the quaternion lies in the icosian ring.
std::vector<Int> icosian_trace_coords(const Quat& q);
Quat icosian_from_trace_coords(const std::vector<Int>& x);
bool icosian_contains(const Quat& q);

// Matrix of a Q-linear map of the algebra on the F4 trace basis.
QMat icosian_map_matrix(const std::function<Quat(const Quat&)>& f);

struct GoldenCandidate {
    ZGram gram;
    IMat T;
    std::optional<IMat> sigma;
    std::string label;
};

// Precondition report for user-supplied golden candidates (empty = usable).
std::vector<std::string> validate_golden_candidate(const GoldenCandidate& c);

}  // namespace golden
