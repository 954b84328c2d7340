#include "declocus/wstate.hpp"

#include <optional>

#include "declocus/pencil.hpp"

namespace declocus {

namespace {

using Factors = std::vector<Vec<Rational>>;

struct WTerm {
    Rational coefficient;
    Factors factors;  // coordinates in the W-state frame
};

// Coordinates in which the tensor is the W-state: t = (from_w) . W_k.
struct Frame {
    std::vector<Mat<Rational>> from_w;  // n_i x 2
    std::vector<Mat<Rational>> to_w;    // 2 x n_i, to_w * from_w = identity
    Factors q;                          // tangency point in core coordinates mapped out
};

// Order k-1 slice of t at position idx of axis.
Tensor<Rational> slice_tensor(const Tensor<Rational>& t, size_t axis, size_t idx) {
    Shape sh;
    for (size_t i = 0; i < t.order(); ++i)
        if (i != axis) sh.push_back(t.shape()[i]);
    Tensor<Rational> out(sh);
    Index src(t.order());
    for (size_t off = 0; off < out.size(); ++off) {
        Index dst = out.index_of(off);
        for (size_t i = 0, j = 0; i < t.order(); ++i) src[i] = i == axis ? idx : dst[j++];
        out.entries()[off] = t[src];
    }
    return out;
}

Vec<Rational> vec2(const Rational& x, const Rational& y) { return {x, y}; }

// The point q_axis: the unique functional whose contraction with t along
// `axis` has rank at most one vanishes on q_axis.
Vec<Rational> tangency_factor(const Tensor<Rational>& core, size_t axis) {
    Tensor<Rational> m0 = slice_tensor(core, axis, 0), m1 = slice_tensor(core, axis, 1);
    std::vector<BinaryForm<Rational>> forms;
    for (size_t j = 0; j < m0.order(); ++j) {
        Pencil<Rational> p{flattening(m0, j), flattening(m1, j)};
        for (auto& f : pencil_minors(p, 2))
            if (!f.is_zero()) forms.push_back(f);
    }
    if (forms.empty()) throw Error(ErrorCode::NotTangential, "every contraction has rank at most one");
    auto prof = bform_root_profile(bform_gcd(forms));
    if (prof.size() != 1 || prof[0].factor.degree() != 1)
        throw Error(ErrorCode::NotTangential, "contractions along axis " + std::to_string(axis) + " do not single out one point");
    const BinaryForm<Rational>& l = prof[0].factor;
    return vec2(l.coeff(0), l.coeff(1));
}

Frame tangent_frame(const Tensor<Rational>& t) {
    if (t.order() < 3) throw Error(ErrorCode::NotTangential, "tangential tensors have order >= 3");
    if (t.is_zero()) throw Error(ErrorCode::NotTangential, "zero tensor");
    auto red = concise_reduce(t);
    const Tensor<Rational>& core = red.core;
    size_t k = core.order();
    for (size_t d : core.shape())
        if (d != 2) throw Error(ErrorCode::NotTangential, "concise shape " + shape_str(core.shape()) + " is not 2x...x2");
    std::vector<Mat<Rational>> basis, basis_inv;
    for (size_t i = 0; i < k; ++i) {
        Vec<Rational> q = tangency_factor(core, i);
        Vec<Rational> r = q[1].is_zero() ? vec2(Rational(0), Rational(1)) : vec2(Rational(1), Rational(0));
        Mat<Rational> b = Mat<Rational>::from_rows({{q[0], r[0]}, {q[1], r[1]}});
        basis.push_back(b);
        basis_inv.push_back(mat_inverse(b));
    }
    // Coordinates of the core in the bases (q_i, r_i).
    Tensor<Rational> c = core;
    for (size_t i = 0; i < k; ++i) c = mode_product(c, i, basis_inv[i]);
    Rational alpha = c[Index(k, 0)];
    std::vector<Rational> beta(k);
    for (size_t off = 0; off < c.size(); ++off) {
        Index idx = c.index_of(off);
        size_t ones = 0, at = 0;
        for (size_t i = 0; i < k; ++i)
            if (idx[i]) ++ones, at = i;
        if (ones >= 2 && !c.entries()[off].is_zero()) throw Error(ErrorCode::NotTangential, "tensor leaves the tangent space at its candidate point");
        if (ones == 1) beta[at] = c.entries()[off];
    }
    for (size_t i = 0; i < k; ++i)
        if (beta[i].is_zero()) throw Error(ErrorCode::NotTangential, "tangent direction is degenerate");
    Frame fr;
    for (size_t i = 0; i < k; ++i) {
        Vec<Rational> q = basis[i].col(0), r = basis[i].col(1);
        Vec<Rational> e1{beta[i] * r[0], beta[i] * r[1]};
        if (i == 0) e1 = {e1[0] + alpha * q[0], e1[1] + alpha * q[1]};
        Mat<Rational> b = Mat<Rational>::from_rows({{q[0], e1[0]}, {q[1], e1[1]}});
        fr.from_w.push_back(red.bases[i] * b);
        fr.to_w.push_back(mat_inverse(b) * red.left_inv[i]);
        fr.q.push_back(red.bases[i] * q);
    }
    return fr;
}

Rational binomial(size_t n, size_t m) {
    Rational r(1);
    for (size_t i = 1; i <= m; ++i) r = r * Rational(static_cast<long>(n - m + i)) / Rational(static_cast<long>(i));
    return r;
}

Rational power(const Rational& x, size_t e) {
    Rational r(1);
    for (size_t i = 0; i < e; ++i) r *= x;
    return r;
}

// Candidate parameters 1, -1, 2, -2, ...
Rational nth_candidate(size_t n) {
    long v = static_cast<long>(n / 2 + 1);
    return Rational(n % 2 ? -v : v);
}

// W_k - sigma e_0^k = c_0 e_1^k + sum_j c_j (e_0 + t_j e_1)^k, k >= 2, by
// apolarity: the annihilating form d_x prod (d_y - t_j d_x) needs
// sum 1/t_j = -sigma with distinct nonzero t_j.
std::optional<std::vector<WTerm>> symmetric_split(size_t k, const Rational& sigma) {
    std::vector<Rational> ts;
    Rational recip_sum(0);
    size_t next = 0;
    while (ts.size() + 1 < k - 1) {
        Rational t = nth_candidate(next++);
        ts.push_back(t);
        recip_sum += t.inv();
    }
    // Adjust the free choices until the last parameter is admissible.
    for (size_t attempt = 0; attempt < 64; ++attempt) {
        Rational last_recip = -sigma - recip_sum;
        if (!last_recip.is_zero()) {
            Rational last = last_recip.inv();
            bool fresh = true;
            for (auto& t : ts)
                if (t == last) fresh = false;
            if (fresh) {
                std::vector<Rational> all = ts;
                all.push_back(last);
                // Rows: monomials x^(k-m) y^m; columns: e_1^k, then (x + t_j y)^k.
                Mat<Rational> a(k + 1, all.size() + 1);
                Vec<Rational> rhs(k + 1, Rational(0));
                rhs[0] = -sigma;
                rhs[1] = Rational(static_cast<long>(k));
                a(k, 0) = Rational(1);
                for (size_t j = 0; j < all.size(); ++j)
                    for (size_t m = 0; m <= k; ++m) a(m, j + 1) = binomial(k, m) * power(all[j], m);
                auto sol = mat_solve(a, rhs);
                if (!sol) return std::nullopt;
                std::vector<WTerm> out;
                out.push_back({(*sol)[0], Factors(k, vec2(Rational(0), Rational(1)))});
                for (size_t j = 0; j < all.size(); ++j) out.push_back({(*sol)[j + 1], Factors(k, vec2(Rational(1), all[j]))});
                return out;
            }
        }
        if (ts.empty()) return std::nullopt;
        recip_sum -= ts.back().inv();
        ts.back() = nth_candidate(next++);
        recip_sum += ts.back().inv();
    }
    return std::nullopt;
}

std::vector<WTerm> decompose_w(size_t k, const Rational& tau, const std::optional<Factors>& want);

// All factors of `want` have nonzero e_1 coordinate: move them to e_1 with
// (x, y) -> (x - s y, y), split symmetrically, move back.
std::optional<std::vector<WTerm>> split_generic(size_t k, const Rational& tau, const Factors& want) {
    std::vector<Rational> s;
    Rational total(0);
    for (auto& w : want) {
        s.push_back(w[0] / w[1]);
        total += s.back();
    }
    if (k == 1) {
        if (!(s[0] == tau)) return std::nullopt;
        return std::vector<WTerm>{{Rational(1), {vec2(s[0], Rational(1))}}};
    }
    auto sym = symmetric_split(k, total - tau);
    if (!sym) return std::nullopt;
    for (auto& term : *sym)
        for (size_t i = 0; i < k; ++i) {
            Vec<Rational>& f = term.factors[i];
            f = vec2(f[0] + f[1] * s[i], f[1]);
        }
    return sym;
}

// W_k + tau e_0^k as k rank-one terms, one of them proportional to `want`
// when given (want must not be the tangency point e_0^k).
std::vector<WTerm> decompose_w(size_t k, const Rational& tau, const std::optional<Factors>& want) {
    if (!want) {
        if (k == 1) return {{Rational(1), {vec2(tau, Rational(1))}}};
        if (k == 2)
            return {{Rational(1), {vec2(Rational(1), Rational(0)), vec2(tau, Rational(1))}},
                    {Rational(1), {vec2(Rational(0), Rational(1)), vec2(Rational(1), Rational(0))}}};
        return decompose_w(k, tau, Factors(k, vec2(Rational(0), Rational(1))));
    }
    std::vector<size_t> fixed, moving;
    for (size_t i = 0; i < k; ++i) ((*want)[i][1].is_zero() ? fixed : moving).push_back(i);
    if (fixed.empty()) {
        auto out = split_generic(k, tau, *want);
        if (!out) throw Error(ErrorCode::NotTangential, "no admissible apolar form found");
        return *out;
    }
    // W_k + tau e_0^k = e_0^F (x) (W_M + tau' e_0^M) + (W_F + (tau - tau') e_0^F) (x) e_0^M.
    Factors want_m;
    Rational total(0);
    for (size_t i : moving) {
        want_m.push_back((*want)[i]);
        total += (*want)[i][0] / (*want)[i][1];
    }
    Rational tau_m(0);
    if (moving.size() == 1) {
        tau_m = total;
    } else if (moving.size() == 2) {
        for (size_t n = 0; total - tau_m == Rational(0); ++n) tau_m = nth_candidate(n);
    }
    auto part_m = split_generic(moving.size(), tau_m, want_m);
    if (!part_m) throw Error(ErrorCode::NotTangential, "no admissible apolar form found");
    auto part_f = decompose_w(fixed.size(), tau - tau_m, std::nullopt);
    std::vector<WTerm> out;
    Vec<Rational> e0 = vec2(Rational(1), Rational(0));
    for (auto& term : *part_m) {
        WTerm w{term.coefficient, Factors(k)};
        for (size_t i : fixed) w.factors[i] = e0;
        for (size_t j = 0; j < moving.size(); ++j) w.factors[moving[j]] = term.factors[j];
        out.push_back(std::move(w));
    }
    for (auto& term : part_f) {
        WTerm w{term.coefficient, Factors(k)};
        for (size_t i : moving) w.factors[i] = e0;
        for (size_t j = 0; j < fixed.size(); ++j) w.factors[fixed[j]] = term.factors[j];
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

Tensor<Rational> Decomposition::sum(const Shape& shape) const {
    Tensor<Rational> t(shape);
    for (auto& term : terms) t = t + term.coefficient * term.rank_one.expand();
    return t;
}

Vec<Rational> unit_normalize(const Vec<Rational>& v, Rational* scale) {
    for (auto& x : v) {
        if (x.is_zero()) continue;
        if (scale) *scale = x;
        Rational inv = x.inv();
        Vec<Rational> out;
        for (auto& y : v) out.push_back(y * inv);
        return out;
    }
    throw Error(ErrorCode::ZeroTensor, "cannot normalize a zero vector");
}

bool proportional(const Vec<Rational>& x, const Vec<Rational>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
    return true;
}

bool same_point(const RankOne<Rational>& p, const RankOne<Rational>& q) {
    if (p.factors.size() != q.factors.size()) return false;
    for (size_t i = 0; i < p.factors.size(); ++i)
        if (!proportional(p.factors[i], q.factors[i])) return false;
    return true;
}

TangencyPoint find_tangency(const Tensor<Rational>& t) {
    Frame fr = tangent_frame(t);
    TangencyPoint q;
    for (auto& f : fr.q) q.factors.push_back(unit_normalize(f));
    return q;
}

Decomposition decompose_tangential(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    if (p.shape() != t.shape()) throw Error(ErrorCode::ShapeMismatch, "rank-one shape differs from tensor shape");
    for (auto& f : p.factors)
        if (vec_is_zero(f)) throw Error(ErrorCode::ZeroTensor, "rank-one tensor has a zero factor");
    Frame fr = tangent_frame(t);
    size_t k = t.order();
    Factors want;
    bool at_q = true;
    for (size_t i = 0; i < k; ++i) {
        Vec<Rational> w = fr.to_w[i] * p.factors[i];
        if (!(fr.from_w[i] * w == p.factors[i])) throw Error(ErrorCode::OutsideConciseSpace, "factor " + std::to_string(i) + " leaves the concise space");
        if (!w[1].is_zero()) at_q = false;
        want.push_back(std::move(w));
    }
    if (at_q) throw Error(ErrorCode::TangencyPointRequested, "the tangency point lies in no minimal decomposition");
    Decomposition d;
    for (auto& term : decompose_w(k, Rational(0), want)) {
        DecompositionTerm out{term.coefficient, {}};
        for (size_t i = 0; i < k; ++i) {
            Rational s(1);
            out.rank_one.factors.push_back(unit_normalize(fr.from_w[i] * term.factors[i], &s));
            out.coefficient *= s;
        }
        d.terms.push_back(std::move(out));
    }
    return d;
}

bool verify_decomposition(const Tensor<Rational>& t, const Decomposition& d) {
    for (auto& term : d.terms) {
        if (term.rank_one.shape() != t.shape()) return false;
        if (term.coefficient.is_zero()) return false;
        for (auto& f : term.rank_one.factors)
            if (vec_is_zero(f)) return false;
    }
    return d.sum(t.shape()) == t;
}

}  // namespace declocus
