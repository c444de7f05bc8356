#pragma once

#include <golden/numeric.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace golden {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const T& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw math_error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& v = at(i, k);
                if (v == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix sum shape mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix diff shape mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& v : r.a_) v = T(0) - v;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw math_error("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

// Fraction-free determinant over an integral domain with exact division.
template <typename T, typename Div>
T bareiss_det(Mat<T> m, Div div) {
    if (m.rows() != m.cols()) throw math_error("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == T(0)) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = div(num, prev);
            }
            m.at(i, k) = T(0);
        }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign == 1 ? d : T(0) - d;
}

// Leading principal minors via fraction-free elimination without pivoting.
// Stops early (appending a single 0) at a zero pivot; that already refutes
// positive definiteness, the only use of this routine.
template <typename T, typename Div>
std::vector<T> principal_minors_ff(Mat<T> m, Div div) {
    if (m.rows() != m.cols()) throw math_error("principal minors of non-square matrix");
    size_t n = m.rows();
    std::vector<T> minors;
    T prev(1);
    for (size_t k = 0; k < n; ++k) {
        if (m.at(k, k) == T(0)) {
            minors.push_back(T(0));
            return minors;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = div(num, prev);
            }
            m.at(i, k) = T(0);
        }
        prev = m.at(k, k);
        minors.push_back(prev);
    }
    return minors;
}

Int det(const IMat& m);
std::vector<Int> principal_minors(const IMat& m);

QMat to_rational(const IMat& m);

// Exact inverse over the rationals; throws on singular input.
QMat inverse(const QMat& m);
QMat inverse(const IMat& m);

// Solves A x = b exactly over the rationals.
std::vector<Rat> solve(const QMat& a, std::vector<Rat> b);

bool is_integral(const QMat& m);
IMat to_integer(const QMat& m);

// Basis (columns) of the lattice {v in Z^n : D v is integral} for a rational
// k x n matrix D, via a column Hermite reduction of [dD | -dI] over Z.
IMat integral_preimage_basis(const QMat& d);

}  // namespace golden
