#ifndef DECLOCUS_CLASSIFY_HPP
#define DECLOCUS_CLASSIFY_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "normal_forms.hpp"
#include "pencil.hpp"
#include "tensor.hpp"

namespace declocus {

enum class OrbitKind { Zero, MatrixRank, Orbit };

struct OrbitId {
    OrbitKind kind = OrbitKind::Zero;
    int value = 0;  // matrix rank, or the orbit number 1..26

    static OrbitId zero() { return {OrbitKind::Zero, 0}; }
    static OrbitId matrix(int r) { return {OrbitKind::MatrixRank, r}; }
    static OrbitId orbit(int n) { return {OrbitKind::Orbit, n}; }
    friend bool operator==(const OrbitId&, const OrbitId&) = default;
    std::string str() const {
        switch (kind) {
            case OrbitKind::Zero: return "Zero";
            case OrbitKind::MatrixRank: return "MatrixRank(" + std::to_string(value) + ")";
            case OrbitKind::Orbit: return "Orbit(" + std::to_string(value) + ")";
        }
        return "?";
    }
};

struct OrbitSummary {
    OrbitId orbit;
    int table_row = 0;      // Table-1 row when the tensor matches one, else 0
    size_t rank = 0;
    size_t border_rank = 0;
    Shape concise_shape;    // flattening ranks in input axis order
    friend bool operator==(const OrbitSummary& a, const OrbitSummary& b) {
        return a.orbit == b.orbit && a.rank == b.rank && a.border_rank == b.border_rank;
    }
};

template <class S>
struct ClassifyReport : OrbitSummary {
    bool matrix_case = false;
    ConciseReduction<S> reduction;
    // Input axes with concise dimension >= 2, in canonical order (non-decreasing
    // dimension, stable); `canonical` is the compressed core on these axes.
    std::vector<size_t> permutation;
    Tensor<S> canonical;
};

// Drops the size-1 axes of a tensor whose other axes are `keep` (in this order).
template <class S>
Tensor<S> squeeze_to(const Tensor<S>& t, const std::vector<size_t>& keep) {
    Shape sh;
    for (size_t a : keep) sh.push_back(t.shape()[a]);
    Tensor<S> out(sh);
    Index src(t.order(), 0);
    for (size_t off = 0; off < out.size(); ++off) {
        Index dst = out.index_of(off);
        for (size_t i = 0; i < keep.size(); ++i) src[keep[i]] = dst[i];
        out.entries()[off] = t[src];
    }
    return out;
}

namespace detail {

inline void fill_from_table(OrbitSummary& s, int n) {
    TableRow row = table_row(n);
    s.orbit = OrbitId::orbit(n);
    s.table_row = n;
    s.rank = row.rank;
    s.border_rank = row.border_rank;
}

[[noreturn]] inline void unsupported(const Shape& sh) {
    throw Error(ErrorCode::UnsupportedShape, "concise shape " + shape_str(sh) + " has no finite-orbit classification");
}

// Orbit number of a concise tensor of shape (2, b, c) with b <= c.
template <class S>
int orbit_of_concise(const Tensor<S>& t, bool literal_232) {
    const Shape& sh = t.shape();
    if (sh == Shape{2, 2, 2}) return hyperdet222(t).is_zero() ? 5 : 6;
    Pencil<S> p = pencil_of(t);
    if (sh == Shape{2, 2, 3}) {
        bool g2 = pencil_minor_gcd(p, 2).degree() > 0;
        if (literal_232) return g2 ? 11 : 12;
        return g2 ? 7 : 8;
    }
    if (sh == Shape{2, 2, 4}) return 9;
    if (sh == Shape{2, 3, 3}) {
        BinaryForm<S> d = det_form(p);
        if (d.is_zero()) return 13;
        if (!bform_discriminant(d).is_zero()) return 18;
        BinaryForm<S> g = bform_repeated_part(d);
        if (g.degree() == 2) {
            auto l = bform_pure_power_root(d, 3);
            return member_rank_at(p, *l) == 1 ? 15 : 16;
        }
        return member_rank_at(p, g) == 1 ? 14 : 17;
    }
    if (sh == Shape{2, 3, 4}) {
        BinaryForm<S> g3 = pencil_minor_gcd(p, 3);
        if (g3.is_zero() || g3.degree() > 2) unsupported(sh);
        if (g3.degree() == 0) return 23;
        if (g3.degree() == 1) return 19;
        if (!bform_discriminant(g3).is_zero()) return 22;
        return pencil_minor_gcd(p, 2).degree() > 0 ? 20 : 21;
    }
    if (sh == Shape{2, 3, 5}) return pencil_minor_gcd(p, 3).degree() > 0 ? 24 : 25;
    if (sh == Shape{2, 3, 6}) return 26;
    unsupported(sh);
}

}  // namespace detail

template <class S>
ClassifyReport<S> classify(const Tensor<S>& t) {
    ClassifyReport<S> rep;
    rep.reduction = concise_reduce(t);
    rep.concise_shape = rep.reduction.core.shape();
    const Shape& cs = rep.concise_shape;
    std::vector<size_t> big;
    for (size_t i = 0; i < cs.size(); ++i)
        if (cs[i] >= 2) big.push_back(i);
    std::stable_sort(big.begin(), big.end(), [&](size_t a, size_t b) { return cs[a] < cs[b]; });
    rep.permutation = big;

    if (big.size() <= 2) {
        size_t r = big.empty() ? 1 : cs[big[0]];
        rep.matrix_case = true;
        rep.orbit = OrbitId::matrix(static_cast<int>(r));
        rep.rank = rep.border_rank = r;
        if (big.size() == 2) rep.canonical = squeeze_to(rep.reduction.core, big);
        if (cs.size() == 3) {
            if (r == 1) {
                rep.table_row = 1;
            } else if (r == 2 && big.size() == 2) {
                size_t small = 3 - big[0] - big[1];
                rep.table_row = small == 0 ? 3 : small == 1 ? 4 : 2;
            } else if (r == 3 && big.size() == 2 && cs[0] == 1) {
                rep.table_row = 10;
            }
        }
        return rep;
    }
    if (big.size() > 3) detail::unsupported(cs);
    rep.canonical = squeeze_to(rep.reduction.core, big);
    const Shape& sh = rep.canonical.shape();
    if (sh[0] != 2 || sh[1] > 3) detail::unsupported(sh);
    Shape literal;
    for (size_t i = 0; i < cs.size(); ++i)
        if (cs[i] >= 2) literal.push_back(cs[i]);
    int n = detail::orbit_of_concise(rep.canonical, literal == Shape{2, 3, 2});
    detail::fill_from_table(rep, n);
    return rep;
}

template <class S>
OrbitSummary classify_summary(const Tensor<S>& t) {
    if (t.is_zero()) {
        OrbitSummary s;
        s.concise_shape = Shape(t.order(), 0);
        return s;
    }
    return static_cast<OrbitSummary>(classify(t));
}

}  // namespace declocus

#endif
