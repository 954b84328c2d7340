#ifndef DECLOCUS_PENCIL_HPP
#define DECLOCUS_PENCIL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "algext.hpp"
#include "binform.hpp"
#include "tensor.hpp"

namespace declocus {

// uA + vB for a tensor of shape (2, b, c): A is the slice at first index 0, B at 1.
template <class S>
struct Pencil {
    Mat<S> A, B;

    size_t rows() const { return A.rows(); }
    size_t cols() const { return A.cols(); }
    BinaryForm<S> entry(size_t i, size_t j) const { return BinaryForm<S>::linear(A(i, j), B(i, j)); }
    // The member s A + t B.
    Mat<S> member(const S& s, const S& t) const { return s * A + t * B; }
};

template <class S>
Pencil<S> pencil_of(const Tensor<S>& t) {
    if (t.order() != 3 || t.shape()[0] != 2) throw Error(ErrorCode::WrongShape, "pencils need shape (2, b, c)");
    return {slice_matrix(t, 0, 0), slice_matrix(t, 0, 1)};
}

inline Pencil<RatFunc> pencil_of(const ParametricTensor& f) { return pencil_of(f.over_function_field()); }

namespace detail {

template <class S>
BinaryForm<S> form_det(const std::vector<std::vector<BinaryForm<S>>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    BinaryForm<S> acc = BinaryForm<S>::zero(static_cast<int>(n));
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<BinaryForm<S>>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<BinaryForm<S>> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        BinaryForm<S> term = m[0][j] * form_det(sub);
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

inline void subsets(size_t n, size_t r, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> s(r);
    for (size_t i = 0; i < r; ++i) s[i] = i;
    if (r > n) return;
    while (true) {
        fn(s);
        size_t i = r;
        while (i > 0 && s[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace detail

// All r x r minors as degree-r forms.
template <class S>
std::vector<BinaryForm<S>> pencil_minors(const Pencil<S>& p, size_t r) {
    if (r < 1 || r > std::min(p.rows(), p.cols())) throw Error(ErrorCode::ShapeMismatch, "minor size out of range");
    std::vector<BinaryForm<S>> out;
    detail::subsets(p.rows(), r, [&](const std::vector<size_t>& rs) {
        detail::subsets(p.cols(), r, [&](const std::vector<size_t>& cs) {
            std::vector<std::vector<BinaryForm<S>>> m;
            for (size_t i : rs) {
                std::vector<BinaryForm<S>> row;
                for (size_t j : cs) row.push_back(p.entry(i, j));
                m.push_back(std::move(row));
            }
            out.push_back(detail::form_det(m));
        });
    });
    return out;
}

// gcd of the r-minors; the zero form (degree r) when all minors vanish.
template <class S>
BinaryForm<S> pencil_minor_gcd(const Pencil<S>& p, size_t r) {
    auto ms = pencil_minors(p, r);
    for (auto& m : ms)
        if (!m.is_zero()) return bform_gcd(ms);
    return BinaryForm<S>::zero(static_cast<int>(r));
}

template <class S>
BinaryForm<S> det_form(const Pencil<S>& p) {
    if (p.rows() != p.cols()) throw Error(ErrorCode::WrongShape, "determinant form needs a square pencil");
    return pencil_minors(p, p.rows()).front();
}

// Rank of the member at the root (b : -a) of the linear form a u + b v.
template <class S>
size_t member_rank_at(const Pencil<S>& p, const BinaryForm<S>& linear) {
    if (linear.degree() != 1) throw Error(ErrorCode::DegreeTooLarge, "member rank needs a linear form");
    return mat_rank(p.member(linear.coeff(1), -linear.coeff(0)));
}

// Cayley's hyperdeterminant of a 2x2x2 tensor.
template <class S>
S hyperdet222(const Tensor<S>& t) {
    if (t.shape() != Shape{2, 2, 2}) throw Error(ErrorCode::WrongShape, "hyperdet222 needs shape (2,2,2)");
    auto e = [&](size_t i, size_t j, size_t k) { return t[{i, j, k}]; };
    S a000 = e(0, 0, 0), a001 = e(0, 0, 1), a010 = e(0, 1, 0), a011 = e(0, 1, 1);
    S a100 = e(1, 0, 0), a101 = e(1, 0, 1), a110 = e(1, 1, 0), a111 = e(1, 1, 1);
    S sq = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    S mixed = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
              a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
    S quad = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
    return sq - S(2) * mixed + S(4) * quad;
}

// Schläfli: minus the discriminant of det(uA + vB) for a 2x3x3 tensor.
template <class S>
S hyperdet233(const Tensor<S>& t) {
    if (t.shape() != Shape{2, 3, 3}) throw Error(ErrorCode::WrongShape, "hyperdet233 needs shape (2,3,3)");
    return -bform_discriminant(det_form(pencil_of(t)));
}

struct JetEntry {
    BinaryForm<Rational> factor;  // irreducible over Q
    int multiplicity;
    size_t member_rank;           // rank of the member at a root of the factor
};

struct JetProfile {
    bool whole_line = false;      // every r-minor vanishes identically
    std::vector<JetEntry> entries;
};

// Rank of the member at a root of an irreducible form, computed over Q or over
// Q[x]/(factor(x, 1)).
inline size_t member_rank_at_factor(const Pencil<Rational>& p, const BinaryForm<Rational>& q) {
    if (q.degree() == 1) return member_rank_at(p, q);
    auto mod = AlgElem::make_modulus(q.dehomogenize(), true);
    AlgElem x = AlgElem::generator(mod);
    Mat<AlgElem> a = p.A.map([](const Rational& r) { return AlgElem(r); });
    Mat<AlgElem> b = p.B.map([](const Rational& r) { return AlgElem(r); });
    return mat_rank(x * a + b);
}

inline JetProfile jet_profile(const Pencil<Rational>& p, size_t r) {
    JetProfile jp;
    BinaryForm<Rational> g = pencil_minor_gcd(p, r);
    if (g.is_zero()) {
        jp.whole_line = true;
        return jp;
    }
    for (auto& rf : bform_root_profile(g)) jp.entries.push_back({rf.factor, rf.multiplicity, member_rank_at_factor(p, rf.factor)});
    return jp;
}

}  // namespace declocus

#endif
