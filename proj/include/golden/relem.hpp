#pragma once

#include <golden/numeric.hpp>

#include <iosfwd>
#include <sstream>

namespace golden {

// Element a + b*theta of R = Z[theta], theta = (-1+sqrt(5))/2, theta^2 = 1 - theta.
struct RElem {
    Int a{0};
    Int b{0};

    RElem() = default;
    RElem(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    RElem(long v) : a(v), b(0) {}

    bool operator==(const RElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RElem& o) const { return !(*this == o); }

    bool is_zero() const { return a == 0 && b == 0; }

    RElem operator+(const RElem& o) const { return {a + o.a, b + o.b}; }
    RElem operator-(const RElem& o) const { return {a - o.a, b - o.b}; }
    RElem operator-() const { return {-a, -b}; }

    // (a+b*theta)(c+d*theta) = ac+bd + (ad+bc-bd)*theta
    RElem operator*(const RElem& o) const {
        return {a * o.a + b * o.b, a * o.b + b * o.a - b * o.b};
    }

    RElem& operator+=(const RElem& o) { a += o.a; b += o.b; return *this; }
    RElem& operator-=(const RElem& o) { a -= o.a; b -= o.b; return *this; }
    RElem& operator*=(const RElem& o) { *this = *this * o; return *this; }

    RElem conj() const { return {a - b, -b}; }
    Int trace() const { return 2 * a - b; }
    Int norm() const { return a * a - a * b - b * b; }

    std::string str() const {
        std::ostringstream os;
        os << a.get_str();
        if (b != 0) os << (b > 0 ? "+" : "") << b.get_str() << "t";
        return os.str();
    }
};

std::ostream& operator<<(std::ostream& os, const RElem& x);

// Element a + b*theta of K = Q(sqrt(5)), rational coordinates.
struct KElem {
    Rat a{0};
    Rat b{0};

    KElem() = default;
    KElem(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    KElem(long v) : a(v), b(0) {}
    KElem(const RElem& x) : a(x.a), b(x.b) {}

    bool operator==(const KElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    bool is_zero() const { return a == 0 && b == 0; }

    KElem operator+(const KElem& o) const { return {a + o.a, b + o.b}; }
    KElem operator-(const KElem& o) const { return {a - o.a, b - o.b}; }
    KElem operator-() const { return {-a, -b}; }
    KElem operator*(const KElem& o) const {
        return {a * o.a + b * o.b, a * o.b + b * o.a - b * o.b};
    }
    KElem& operator+=(const KElem& o) { a += o.a; b += o.b; return *this; }
    KElem& operator-=(const KElem& o) { a -= o.a; b -= o.b; return *this; }
    KElem& operator*=(const KElem& o) { *this = *this * o; return *this; }

    KElem conj() const { return {a - b, -b}; }
    Rat trace() const { return 2 * a - b; }
    Rat norm() const { return a * a - a * b - b * b; }

    KElem inverse() const {
        Rat n = norm();
        if (n == 0) throw math_error("inverse of zero in K");
        return {(a - b) / n, -b / n};  // conj / norm
    }

    std::string str() const {
        std::ostringstream os;
        os << a;
        if (b != 0) os << (b > 0 ? "+" : "") << b << "t";
        return os.str();
    }
};

std::ostream& operator<<(std::ostream& os, const KElem& x);

// Named constants of the golden setting.
inline RElem theta() { return {0, 1}; }
inline RElem theta_bar() { return {-1, -1}; }          // conj(theta) = -1 - theta
inline RElem theta_sq() { return {1, -1}; }            // theta^2 = 1 - theta
inline RElem phi() { return {1, 1}; }                  // 1 + theta = (1+sqrt5)/2, fundamental unit
inline RElem phi_sq() { return {2, 1}; }               // phi^2 = theta^{-2}
inline RElem sqrt5() { return {1, 2} ; }               // 1 + 2*theta
inline RElem eta() { return {3, 1}; }                  // 3 + theta, totally positive generator of (sqrt5)
inline RElem eta_bar() { return {2, -1}; }
inline KElem eta_inv() { return {make_rat(2, 5), make_rat(-1, 5)}; }  // conj(eta)/5

}  // namespace golden
