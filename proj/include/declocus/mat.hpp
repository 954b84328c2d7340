#ifndef DECLOCUS_MAT_HPP
#define DECLOCUS_MAT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace declocus {

template <class S>
using Vec = std::vector<S>;

// Dense row-major matrix over a field S.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, S(0)) {}
    Mat(size_t rows, size_t cols, std::vector<S> entries) : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    }
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<S>>& rows) {
        size_t c = rows.empty() ? 0 : rows[0].size();
        Mat m(rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
            for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Mat column(const Vec<S>& v) {
        Mat m(v.size(), 1);
        for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    S& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const S& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const std::vector<S>& entries() const { return a_; }

    Vec<S> row(size_t i) const { return Vec<S>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }
    Vec<S> col(size_t j) const {
        Vec<S> v;
        for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    Mat transpose() const {
        Mat t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Mat select_cols(const std::vector<size_t>& cols) const {
        Mat m(r_, cols.size());
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
        return m;
    }
    Mat select_rows(const std::vector<size_t>& rows) const {
        Mat m(rows.size(), c_);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(rows[i], j);
        return m;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    template <class F>
    auto map(F f) const -> Mat<decltype(f(std::declval<S>()))> {
        using T = decltype(f(std::declval<S>()));
        std::vector<T> v;
        v.reserve(a_.size());
        for (auto& x : a_) v.push_back(f(x));
        return Mat<T>(r_, c_, std::move(v));
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw Error(ErrorCode::ShapeMismatch, "matrix product dimensions");
        Mat m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Mat operator*(const S& s, Mat a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }
    friend Vec<S> operator*(const Mat& a, const Vec<S>& v) {
        if (a.c_ != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector dimensions");
        Vec<S> out(a.r_, S(0));
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t j = 0; j < a.c_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] - b.a_[i]).is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < r_; ++i) {
            os << (i ? ", [" : "[");
            for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    static void check_same(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
    }
    size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class S>
struct Elimination {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    std::vector<S> pivots;  // Bareiss pivots, in elimination order
    S det_sign_factor = S(1);
};

// Fraction-free Bareiss elimination. The pivot in each column is the first
// nonzero entry at or below the current row.
template <class S>
Elimination<S> bareiss(Mat<S> m) {
    Elimination<S> e;
    size_t k = 0;
    S prev(1);
    for (size_t col = 0; col < m.cols() && k < m.rows(); ++col) {
        size_t p = k;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != k) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(k, j));
            e.det_sign_factor = -e.det_sign_factor;
        }
        const S piv = m(k, col);
        for (size_t i = k + 1; i < m.rows(); ++i) {
            S lead = m(i, col);
            for (size_t j = col + 1; j < m.cols(); ++j) m(i, j) = (piv * m(i, j) - lead * m(k, j)) / prev;
            m(i, col) = S(0);
        }
        prev = piv;
        e.pivot_cols.push_back(col);
        e.pivots.push_back(piv);
        ++k;
    }
    e.rank = k;
    return e;
}

template <class S>
size_t mat_rank(const Mat<S>& m) {
    return bareiss(m).rank;
}

template <class S>
S mat_det(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
    if (m.rows() == 0) return S(1);
    auto e = bareiss(m);
    if (e.rank < m.rows()) return S(0);
    return e.det_sign_factor * e.pivots.back();
}

// Reduced row echelon form with its pivot columns.
template <class S>
std::pair<Mat<S>, std::vector<size_t>> rref(Mat<S> m) {
    std::vector<size_t> piv;
    size_t k = 0;
    for (size_t col = 0; col < m.cols() && k < m.rows(); ++col) {
        size_t p = k;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != k)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(k, j));
        S inv = m(k, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m(k, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == k || m(i, col).is_zero()) continue;
            S f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
        }
        piv.push_back(col);
        ++k;
    }
    return {std::move(m), std::move(piv)};
}

// Basis of the right kernel.
template <class S>
std::vector<Vec<S>> mat_nullspace(const Mat<S>& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<Vec<S>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec<S> v(m.cols(), S(0));
        v[f] = S(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some x with m x = b, if one exists.
template <class S>
std::optional<Vec<S>> mat_solve(const Mat<S>& m, const Vec<S>& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "right-hand side length");
    Mat<S> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [r, piv] = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec<S> x(m.cols(), S(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
    return x;
}

template <class S>
Mat<S> mat_inverse(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    size_t n = m.rows();
    Mat<S> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto [r, piv] = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    Mat<S> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

// Moore-Penrose pseudoinverse through the full-rank factorization A = B C with
// B the pivot columns of A and C the nonzero rows of rref(A).
template <class S>
Mat<S> pseudoinverse(const Mat<S>& a) {
    auto [r, piv] = rref(a);
    if (piv.empty()) return Mat<S>(a.cols(), a.rows());
    Mat<S> b = a.select_cols(piv);
    std::vector<size_t> rows;
    for (size_t i = 0; i < piv.size(); ++i) rows.push_back(i);
    Mat<S> c = r.select_rows(rows);
    Mat<S> bt = b.transpose(), ct = c.transpose();
    return ct * mat_inverse(c * ct) * mat_inverse(bt * b) * bt;
}

template <class S>
S dot(const Vec<S>& x, const Vec<S>& y) {
    if (x.size() != y.size()) throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
    S s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace declocus

#endif
