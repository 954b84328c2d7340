#ifndef DECLOCUS_TENSOR_HPP
#define DECLOCUS_TENSOR_HPP

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mat.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"

namespace declocus {

using Shape = std::vector<size_t>;
using Index = std::vector<size_t>;

inline size_t shape_size(const Shape& s) {
    size_t n = 1;
    for (size_t d : s) n *= d;
    return n;
}

// Dense order-k tensor, row-major (last index varies fastest).
template <class S>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape) : shape_(std::move(shape)), a_(shape_size(shape_), S(0)) {
        if (shape_.size() < 2) throw Error(ErrorCode::WrongShape, "tensors need at least two axes");
    }
    Tensor(Shape shape, std::vector<S> entries) : shape_(std::move(shape)), a_(std::move(entries)) {
        if (shape_.size() < 2) throw Error(ErrorCode::WrongShape, "tensors need at least two axes");
        if (a_.size() != shape_size(shape_)) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    }

    const Shape& shape() const { return shape_; }
    size_t order() const { return shape_.size(); }
    size_t size() const { return a_.size(); }
    const std::vector<S>& entries() const { return a_; }
    std::vector<S>& entries() { return a_; }

    size_t offset(const Index& idx) const {
        size_t o = 0;
        for (size_t i = 0; i < shape_.size(); ++i) o = o * shape_[i] + idx[i];
        return o;
    }
    Index index_of(size_t off) const {
        Index idx(shape_.size());
        for (size_t i = shape_.size(); i-- > 0;) {
            idx[i] = off % shape_[i];
            off /= shape_[i];
        }
        return idx;
    }
    S& operator[](const Index& idx) { return a_[offset(idx)]; }
    const S& operator[](const Index& idx) const { return a_[offset(idx)]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    template <class F>
    auto map(F f) const -> Tensor<decltype(f(std::declval<S>()))> {
        using T = decltype(f(std::declval<S>()));
        std::vector<T> v;
        v.reserve(a_.size());
        for (auto& x : a_) v.push_back(f(x));
        return Tensor<T>(shape_, std::move(v));
    }

    friend Tensor operator+(Tensor a, const Tensor& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Tensor operator-(Tensor a, const Tensor& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Tensor operator*(const S& s, Tensor a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] - b.a_[i]).is_zero()) return false;
        return true;
    }

private:
    static void check_same(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw Error(ErrorCode::ShapeMismatch, "tensor shapes differ");
    }
    Shape shape_;
    std::vector<S> a_;
};

// v^1 ⊗ ... ⊗ v^k kept in factored form.
template <class S>
struct RankOne {
    std::vector<Vec<S>> factors;

    Shape shape() const {
        Shape s;
        for (auto& f : factors) s.push_back(f.size());
        return s;
    }
    Tensor<S> expand() const {
        Tensor<S> t(shape());
        std::vector<S>& a = t.entries();
        a.assign(1, S(1));
        for (auto& f : factors) {
            std::vector<S> next;
            next.reserve(a.size() * f.size());
            for (auto& x : a)
                for (auto& y : f) next.push_back(x * y);
            a = std::move(next);
        }
        return t;
    }
    template <class F>
    auto map(F f) const -> RankOne<decltype(f(std::declval<S>()))> {
        RankOne<decltype(f(std::declval<S>()))> r;
        for (auto& v : factors) {
            r.factors.emplace_back();
            for (auto& x : v) r.factors.back().push_back(f(x));
        }
        return r;
    }
};

template <class S>
void check_axis(const Tensor<S>& t, size_t axis) {
    if (axis >= t.order()) throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(axis) + " out of range");
}

// n_axis x (product of the other dimensions), columns row-major over the
// remaining axes in increasing order.
template <class S>
Mat<S> flattening(const Tensor<S>& t, size_t axis) {
    check_axis(t, axis);
    const Shape& sh = t.shape();
    size_t n = sh[axis], rest = t.size() / n;
    Mat<S> m(n, rest);
    size_t inner = 1;
    for (size_t i = axis + 1; i < sh.size(); ++i) inner *= sh[i];
    for (size_t off = 0; off < t.size(); ++off) {
        size_t outer = off / (n * inner), row = (off / inner) % n, in = off % inner;
        m(row, outer * inner + in) = t.entries()[off];
    }
    return m;
}

// Inverse of flattening for a given target shape.
template <class S>
Tensor<S> unflatten(const Mat<S>& m, const Shape& shape, size_t axis) {
    Tensor<S> t(shape);
    size_t n = shape[axis], inner = 1;
    for (size_t i = axis + 1; i < shape.size(); ++i) inner *= shape[i];
    if (m.rows() != n || m.cols() * n != t.size()) throw Error(ErrorCode::ShapeMismatch, "matrix does not fit shape");
    for (size_t off = 0; off < t.size(); ++off) {
        size_t outer = off / (n * inner), row = (off / inner) % n, in = off % inner;
        t.entries()[off] = m(row, outer * inner + in);
    }
    return t;
}

template <class S>
std::vector<size_t> flattening_ranks(const Tensor<S>& t) {
    std::vector<size_t> r;
    for (size_t i = 0; i < t.order(); ++i) r.push_back(mat_rank(flattening(t, i)));
    return r;
}

// Multiplies axis `axis` by the m x n_axis matrix M.
template <class S>
Tensor<S> mode_product(const Tensor<S>& t, size_t axis, const Mat<S>& m) {
    check_axis(t, axis);
    if (m.cols() != t.shape()[axis]) throw Error(ErrorCode::ShapeMismatch, "mode product dimensions");
    Shape sh = t.shape();
    sh[axis] = m.rows();
    return unflatten(m * flattening(t, axis), sh, axis);
}

template <class S>
Tensor<S> apply_gl(const Tensor<S>& t, const std::vector<Mat<S>>& mats) {
    if (mats.size() != t.order()) throw Error(ErrorCode::ShapeMismatch, "one matrix per axis required");
    Tensor<S> out = t;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != t.shape()[i] || mats[i].cols() != t.shape()[i])
            throw Error(ErrorCode::ShapeMismatch, "matrix does not match axis dimension");
        if (mat_rank(mats[i]) != mats[i].rows()) throw Error(ErrorCode::SingularMatrix, "singular matrix on axis " + std::to_string(i));
        out = mode_product(out, i, mats[i]);
    }
    return out;
}

template <class S>
RankOne<S> apply_gl(const RankOne<S>& p, const std::vector<Mat<S>>& mats) {
    if (mats.size() != p.factors.size()) throw Error(ErrorCode::ShapeMismatch, "one matrix per axis required");
    RankOne<S> out;
    for (size_t i = 0; i < mats.size(); ++i) out.factors.push_back(mats[i] * p.factors[i]);
    return out;
}

template <class S>
Tensor<S> subtract_scaled(const Tensor<S>& t, const S& lam, const RankOne<S>& p) {
    if (p.shape() != t.shape()) throw Error(ErrorCode::ShapeMismatch, "rank-one shape differs from tensor shape");
    return t - lam * p.expand();
}

template <class S>
S dual_pairing(const Tensor<S>& tstar, const RankOne<S>& p) {
    if (p.shape() != tstar.shape()) throw Error(ErrorCode::ShapeMismatch, "rank-one shape differs from tensor shape");
    // Contract the last axis repeatedly.
    std::vector<S> cur = tstar.entries();
    for (size_t ax = tstar.order(); ax-- > 0;) {
        const Vec<S>& f = p.factors[ax];
        size_t n = f.size();
        std::vector<S> next(cur.size() / n, S(0));
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j < n; ++j) next[i] += cur[i * n + j] * f[j];
        cur = std::move(next);
    }
    return cur[0];
}

// Slice at position `index` of axis `axis`, as a tensor of order k-1 (or a
// matrix when k = 3).
template <class S>
Mat<S> slice_matrix(const Tensor<S>& t, size_t axis, size_t index) {
    if (t.order() != 3) throw Error(ErrorCode::WrongShape, "matrix slices need order 3");
    check_axis(t, axis);
    std::vector<size_t> other;
    for (size_t i = 0; i < 3; ++i)
        if (i != axis) other.push_back(i);
    Mat<S> m(t.shape()[other[0]], t.shape()[other[1]]);
    Index idx(3);
    idx[axis] = index;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            idx[other[0]] = i;
            idx[other[1]] = j;
            m(i, j) = t[idx];
        }
    return m;
}

// Axis permutation: result axis i is input axis perm[i].
template <class S>
Tensor<S> permute_axes(const Tensor<S>& t, const std::vector<size_t>& perm) {
    Shape sh;
    for (size_t p : perm) sh.push_back(t.shape()[p]);
    Tensor<S> out(sh);
    Index src(t.order());
    for (size_t off = 0; off < out.size(); ++off) {
        Index dst = out.index_of(off);
        for (size_t i = 0; i < perm.size(); ++i) src[perm[i]] = dst[i];
        out.entries()[off] = t[src];
    }
    return out;
}

template <class S>
RankOne<S> permute_axes(const RankOne<S>& p, const std::vector<size_t>& perm) {
    RankOne<S> out;
    for (size_t q : perm) out.factors.push_back(p.factors[q]);
    return out;
}

template <class S>
struct ConciseReduction {
    Tensor<S> core;
    std::vector<Mat<S>> bases;      // n_i x r_i, columns span the image of flattening i
    std::vector<Mat<S>> left_inv;   // r_i x n_i with left_inv * basis = identity
};

// Left inverse of a full-column-rank matrix built from its pivot rows.
template <class S>
Mat<S> left_inverse(const Mat<S>& b) {
    auto e = rref(b.transpose());
    const std::vector<size_t>& rows = e.second;
    if (rows.size() != b.cols()) throw Error(ErrorCode::SingularMatrix, "columns are dependent");
    Mat<S> sq = b.select_rows(rows);
    Mat<S> inv = mat_inverse(sq);
    Mat<S> l(b.cols(), b.rows());
    for (size_t i = 0; i < b.cols(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) l(i, rows[j]) = inv(i, j);
    return l;
}

template <class S>
ConciseReduction<S> concise_reduce(const Tensor<S>& t) {
    if (t.is_zero()) throw Error(ErrorCode::ZeroTensor, "cannot compress the zero tensor");
    ConciseReduction<S> red;
    red.core = t;
    for (size_t ax = 0; ax < t.order(); ++ax) {
        Mat<S> f = flattening(t, ax);
        if (bareiss(f).rank == f.rows()) {
            red.bases.push_back(Mat<S>::identity(f.rows()));
            red.left_inv.push_back(Mat<S>::identity(f.rows()));
            continue;
        }
        auto [r, piv] = rref(f);
        Mat<S> basis = f.select_cols(piv);
        Mat<S> l = left_inverse(basis);
        red.core = mode_product(red.core, ax, l);
        red.bases.push_back(std::move(basis));
        red.left_inv.push_back(std::move(l));
    }
    return red;
}

template <class S>
Tensor<S> expand_through(const Tensor<S>& core, const std::vector<Mat<S>>& bases) {
    Tensor<S> t = core;
    for (size_t ax = 0; ax < bases.size(); ++ax) t = mode_product(t, ax, bases[ax]);
    return t;
}

// T - λP with entries affine in λ.
struct ParametricTensor {
    Tensor<Rational> base;
    RankOne<Rational> direction;

    ParametricTensor(Tensor<Rational> t, RankOne<Rational> p) : base(std::move(t)), direction(std::move(p)) {
        if (direction.shape() != base.shape()) throw Error(ErrorCode::ShapeMismatch, "rank-one shape differs from tensor shape");
    }
    Tensor<RatFunc> over_function_field() const {
        Tensor<Rational> pe = direction.expand();
        std::vector<RatFunc> v;
        v.reserve(base.size());
        for (size_t i = 0; i < base.size(); ++i)
            v.emplace_back(UniPoly(std::vector<Rational>{base.entries()[i], -pe.entries()[i]}));
        return Tensor<RatFunc>(base.shape(), std::move(v));
    }
    // Specialization at λ = lam in a domain S containing Q.
    template <class S>
    Tensor<S> at(const S& lam) const {
        Tensor<Rational> pe = direction.expand();
        std::vector<S> v;
        v.reserve(base.size());
        for (size_t i = 0; i < base.size(); ++i) v.push_back(S(base.entries()[i]) - lam * S(pe.entries()[i]));
        return Tensor<S>(base.shape(), std::move(v));
    }
};

inline std::string shape_str(const Shape& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "x" : "") + std::to_string(s[i]);
    return out;
}

}  // namespace declocus

#endif
