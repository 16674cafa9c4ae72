#ifndef HUMBERT_MATRIX_HPP
#define HUMBERT_MATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "humbert/error.hpp"

namespace humbert {

// Exact complex scalar with rational real and imaginary parts.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int x) : re(x), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    GaussianRational conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    GaussianRational inverse() const {
        check(!is_zero(), "DivisionByZero", "inverse of zero Gaussian rational");
        mpq_class n = norm();
        return {re / n, -im / n};
    }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
}
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.re << (z.im >= 0 ? "+" : "") << z.im << "i";
}

namespace detail {
inline bool scalar_is_zero(const mpz_class& x) { return x == 0; }
inline bool scalar_is_zero(const mpq_class& x) { return x == 0; }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline mpq_class scalar_inverse(const mpq_class& x) { return mpq_class(1) / x; }
inline GaussianRational scalar_inverse(const GaussianRational& x) { return x.inverse(); }
} // namespace detail

// Dense matrix over an exact scalar. All dimensions in this library are tiny
// (at most a few dozen), so no attempt at sparsity or blocking is made.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        check(rows >= 0 && cols >= 0, "DimensionMismatch", "negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat block(int i0, int j0, int r, int c) const {
        check(i0 >= 0 && j0 >= 0 && i0 + r <= rows_ && j0 + c <= cols_, "DimensionMismatch",
              "block out of range");
        Mat b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(int i0, int j0, const Mat& b) {
        check(i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_, "DimensionMismatch",
              "block out of range");
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Mat col(int j) const { return block(0, j, rows_, 1); }

    bool is_zero() const {
        for (const T& x : a_)
            if (!detail::scalar_is_zero(x)) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i += c * row j
    void add_row(int i, int j, const T& c) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }
    // col i += c * col j
    void add_col(int i, int j, const T& c) {
        for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }
    void scale_row(int i, const T& c) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) *= c;
    }
    void scale_col(int j, const T& c) {
        for (int k = 0; k < rows_; ++k) (*this)(k, j) *= c;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<mpz_class>;
using RatMat = Mat<mpq_class>;
using GaussMat = Mat<GaussianRational>;

template <class T>
bool operator==(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}
template <class T>
bool operator!=(const Mat<T>& a, const Mat<T>& b) {
    return !(a == b);
}

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    check(a.cols() == b.rows(), "DimensionMismatch", "matrix product shape");
    Mat<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (detail::scalar_is_zero(a(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
    check(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "matrix sum shape");
    Mat<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
    check(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "matrix diff shape");
    Mat<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a) {
    Mat<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& a) {
    Mat<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

template <class T>
Mat<T> hconcat(const Mat<T>& a, const Mat<T>& b) {
    check(a.rows() == b.rows(), "DimensionMismatch", "hconcat rows");
    Mat<T> c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
    return r;
}

inline GaussMat to_gauss(const RatMat& m) {
    GaussMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = GaussianRational(m(i, j));
    return r;
}

inline GaussMat to_gauss(const IntMat& m) { return to_gauss(to_rat(m)); }

inline RatMat real_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    return r;
}

inline RatMat imag_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
    return r;
}

// If every entry is an integer, strip the denominators.
inline std::optional<IntMat> to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) return std::nullopt;
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

// ---- exact elimination over a field (mpq_class or GaussianRational) ----

template <class T>
int mat_rank(Mat<T> a) {
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!detail::scalar_is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        T inv = detail::scalar_inverse(a(r, c));
        a.scale_row(r, inv);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && !detail::scalar_is_zero(a(i, c))) a.add_row(i, r, -a(i, c));
        ++r;
    }
    return r;
}

template <class T>
T mat_det(Mat<T> a) {
    check(a.rows() == a.cols(), "DimensionMismatch", "determinant of non-square matrix");
    T det(1);
    for (int c = 0; c < a.cols(); ++c) {
        int piv = -1;
        for (int i = c; i < a.rows(); ++i)
            if (!detail::scalar_is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) return T(0);
        if (piv != c) {
            a.swap_rows(c, piv);
            det = -det;
        }
        det *= a(c, c);
        T inv = detail::scalar_inverse(a(c, c));
        for (int i = c + 1; i < a.rows(); ++i)
            if (!detail::scalar_is_zero(a(i, c))) a.add_row(i, c, -(a(i, c) * inv));
    }
    return det;
}

// Solve A X = B exactly. Requires rank(A) == A.cols(); returns nullopt when
// the system is inconsistent.
template <class T>
std::optional<Mat<T>> mat_solve(const Mat<T>& A, const Mat<T>& B) {
    check(A.rows() == B.rows(), "DimensionMismatch", "solve shape");
    Mat<T> w = hconcat(A, B);
    int n = A.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < w.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < w.rows(); ++i)
            if (!detail::scalar_is_zero(w(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        w.swap_rows(r, piv);
        w.scale_row(r, detail::scalar_inverse(w(r, c)));
        for (int i = 0; i < w.rows(); ++i)
            if (i != r && !detail::scalar_is_zero(w(i, c))) w.add_row(i, r, -w(i, c));
        pivot_col.push_back(c);
        ++r;
    }
    check(int(pivot_col.size()) == n, "RankDeficient", "solve requires full column rank");
    // full column rank: pivot columns are exactly 0..n-1 in order
    for (int i = r; i < w.rows(); ++i)
        for (int j = n; j < w.cols(); ++j)
            if (!detail::scalar_is_zero(w(i, j))) return std::nullopt;
    Mat<T> X(n, B.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < B.cols(); ++j) X(i, j) = w(i, n + j);
    return X;
}

template <class T>
Mat<T> mat_inverse(const Mat<T>& A) {
    check(A.rows() == A.cols(), "DimensionMismatch", "inverse of non-square matrix");
    auto X = mat_solve(A, Mat<T>::identity(A.rows()));
    check(X.has_value(), "RankDeficient", "matrix not invertible");
    return *X;
}

} // namespace humbert

#endif
