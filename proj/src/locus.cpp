#include "declocus/locus.hpp"

#include "declocus/wstate.hpp"

namespace declocus {

namespace {

void check_inputs(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    if (p.shape() != t.shape()) throw Error(ErrorCode::ShapeMismatch, "rank-one shape " + shape_str(p.shape()) + " differs from tensor shape " + shape_str(t.shape()));
    if (t.is_zero()) throw Error(ErrorCode::ZeroTensor, "the zero tensor has an empty decomposition locus");
    for (auto& f : p.factors)
        if (vec_is_zero(f)) throw Error(ErrorCode::ZeroTensor, "rank-one tensor has a zero factor");
}

std::optional<Rational> nonzero_root(const UniPoly& g) {
    if (g.degree() != 1) return std::nullopt;
    Rational r = -g.coeff(0) / g.coeff(1);
    if (r.is_zero()) return std::nullopt;
    return r;
}

// gcd over Q[λ] of the maximal minors of flatt_axis(T - λP); every minor is
// affine in λ, so two evaluations determine it.
UniPoly flattening_gcd(const Tensor<Rational>& t, const Tensor<Rational>& pe, size_t axis) {
    Mat<Rational> f0 = flattening(t, axis), f1 = flattening(t - pe, axis);
    size_t r = f0.rows();
    UniPoly g;
    bool unit = false;
    detail::subsets(f0.cols(), r, [&](const std::vector<size_t>& cols) {
        if (unit) return;
        Rational d0 = mat_det(f0.select_cols(cols)), d1 = mat_det(f1.select_cols(cols));
        g = gcd(g, UniPoly(std::vector<Rational>{d0, d1 - d0}));
        unit = g.degree() == 0;
    });
    return g;
}

std::optional<Rational> any_flattening_root(const Tensor<Rational>& t, const Tensor<Rational>& pe) {
    for (size_t ax = 0; ax < t.order(); ++ax)
        if (auto r = nonzero_root(flattening_gcd(t, pe, ax))) return r;
    return std::nullopt;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly::linear_root(xs[j]);
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * UniPoly(ys[i] / denom);
    }
    return acc;
}

// H_233(T - λP), of degree at most 4 in λ.
UniPoly hyperdet233_in_lambda(const ParametricTensor& f) {
    std::vector<Rational> xs, ys;
    for (long k = 0; k <= 4; ++k) {
        xs.emplace_back(k);
        ys.push_back(hyperdet233(f.at(Rational(k))));
    }
    return interpolate(xs, ys);
}

// Concise 2x3x3 tensor in orbit 14: the determinant form has a simple and a
// double root, and the member at the double root has rank one.
template <class S>
bool is_orbit14(const Tensor<S>& t) {
    Pencil<S> p = pencil_of(t);
    BinaryForm<S> d = det_form(p);
    if (d.is_zero() || !bform_discriminant(d).is_zero()) return false;
    BinaryForm<S> g = bform_repeated_part(d);
    return g.degree() == 1 && member_rank_at(p, g) == 1;
}

// Concise 2x3x4 tensor in orbit 21: the 3-minors meet in a 2-jet and the
// 2-minors have no common root.
template <class S>
bool is_orbit21(const Tensor<S>& t) {
    Pencil<S> p = pencil_of(t);
    BinaryForm<S> g3 = pencil_minor_gcd(p, 3);
    if (g3.is_zero() || g3.degree() != 2 || !bform_discriminant(g3).is_zero()) return false;
    return pencil_minor_gcd(p, 2).degree() == 0;
}

template <class Pred>
std::optional<LambdaWitness> search_roots(const ParametricTensor& f, const UniPoly& q, Pred& pred) {
    if (q.degree() == 1) {
        auto r = nonzero_root(q);
        if (r && pred(f.at(*r))) return LambdaWitness::rational(*r);
        return std::nullopt;
    }
    UniPoly rest = q;
    for (auto& r : rational_roots(q)) {
        if (!r.is_zero() && pred(f.at(r))) return LambdaWitness::rational(r);
        rest = rest / UniPoly::linear_root(r);
    }
    if (rest.degree() < 1) return std::nullopt;
    auto mod = AlgElem::make_modulus(rest.monic(), false);
    try {
        if (!pred(f.at(AlgElem::generator(mod)))) return std::nullopt;
    } catch (const ZeroDivisorError& z) {
        if (auto w = search_roots(f, z.factor().monic(), pred)) return w;
        return search_roots(f, (rest / z.factor()).monic(), pred);
    }
    auto fs = factor_best_effort(rest);
    return LambdaWitness::algebraic(fs.front().poly);
}

// Some λ ≠ 0 at which pred(T - λP) holds: decided over Q(λ), then at the roots
// of every polynomial the generic evaluation branched on.
template <class Pred>
std::optional<LambdaWitness> find_lambda(const ParametricTensor& f, Pred pred) {
    ZeroTestLog log;
    bool generic;
    {
        ZeroTestScope scope(log);
        generic = pred(f.over_function_field());
    }
    std::vector<UniPoly> polys(log.polys.begin(), log.polys.end());
    polys.push_back(UniPoly::x());
    if (generic) return LambdaWitness::rational(avoiding_point(polys));
    for (auto& b : coprime_base(polys)) {
        if (b == UniPoly::x()) continue;
        if (auto w = search_roots(f, b, pred)) return w;
    }
    return std::nullopt;
}

LocusVerdict from_witness(const std::optional<LambdaWitness>& w) {
    return w ? LocusVerdict::in(*w) : LocusVerdict::forbidden();
}

LocusVerdict from_root(const std::optional<Rational>& r) {
    return r ? LocusVerdict::in(LambdaWitness::rational(*r)) : LocusVerdict::forbidden();
}

LocusVerdict generic_path(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    size_t rt = classify_summary(t).rank;
    ParametricReport rep = classify_parametric(ParametricTensor(t, p));
    if (rep.generic.rank + 1 == rt) return LocusVerdict::in(LambdaWitness::rational(rep.generic_point));
    std::optional<UniPoly> best;
    for (auto& e : rep.exceptional) {
        if (e.factor == UniPoly::x() || e.summary.rank + 1 != rt) continue;
        if (e.factor.degree() == 1) return LocusVerdict::in(LambdaWitness::algebraic(e.factor));
        if (!best) best = e.factor;
    }
    if (best) return LocusVerdict::in(LambdaWitness::algebraic(*best));
    return LocusVerdict::forbidden();
}

// P = u ⊗ v ⊗ w against a concise 2 x b x c tensor with b, c in {4, 6}, 2b = c:
// the flattening along the last axis is square and T - λP drops rank there
// exactly when λ <T*, P> = 1.
LocusVerdict dual_pairing_path(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    Mat<Rational> m = flattening(t, 2);
    Mat<Rational> fp = flattening(p.expand(), 2);
    const Vec<Rational>& c = p.factors[2];
    size_t k = 0;
    while (c[k].is_zero()) ++k;
    Vec<Rational> w = fp.row(k);
    for (auto& x : w) x /= c[k];
    Rational pairing = dot(w, mat_inverse(m) * c);
    if (pairing.is_zero()) return LocusVerdict::forbidden();
    return LocusVerdict::in(LambdaWitness::rational(pairing.inv()));
}

// Rank-4 concise 2x3x3 tensors (orbits 13, 15, 16, 17).
LocusVerdict rank4_233(const ParametricTensor& f, const Tensor<Rational>& pe) {
    if (auto r = any_flattening_root(f.base, pe)) return from_root(r);
    UniPoly h = hyperdet233_in_lambda(f);
    if (!h.is_zero()) return LocusVerdict::in(LambdaWitness::rational(avoiding_point({h, UniPoly::x()})));
    return from_witness(find_lambda(f, [](const auto& x) { return is_orbit14(x); }));
}

// Rank-4 concise 2x3x4 tensors (orbits 19, 20, 22, 23).
LocusVerdict rank4_234(const ParametricTensor& f, const Tensor<Rational>& pe) {
    if (auto r = nonzero_root(flattening_gcd(f.base, pe, 0))) return from_root(r);
    auto r3 = nonzero_root(flattening_gcd(f.base, pe, 2));
    if (!r3) return LocusVerdict::forbidden();
    if (flattening_gcd(f.base, pe, 1).eval(*r3).is_zero()) return from_root(r3);
    Tensor<Rational> core = concise_reduce(f.at(*r3)).core;
    if (core.shape() != Shape{2, 3, 3}) return from_root(r3);
    if (!hyperdet233(core).is_zero() || is_orbit14(core)) return from_root(r3);
    return LocusVerdict::forbidden();
}

// The rank-5 tensors of 2x3x4 (orbit 21).
LocusVerdict rank5_234(const ParametricTensor& f, const Tensor<Rational>& pe) {
    if (auto r = any_flattening_root(f.base, pe)) return from_root(r);
    return from_witness(find_lambda(f, [](const auto& x) { return !is_orbit21(x); }));
}

// Orbits 24 and 25: a rank-4 specialization must drop a flattening.
LocusVerdict rank5_235(const ParametricTensor& f, const Tensor<Rational>& pe) {
    for (size_t ax = 0; ax < 3; ++ax) {
        auto r = nonzero_root(flattening_gcd(f.base, pe, ax));
        if (r && classify_summary(f.at(*r)).rank == 4) return from_root(r);
    }
    return LocusVerdict::forbidden();
}

// Orbits 14 and 18: rank 2 needs both 3-dimensional flattenings to drop.
LocusVerdict rank3_233(const ParametricTensor& f, const Tensor<Rational>& pe) {
    auto r = nonzero_root(gcd(flattening_gcd(f.base, pe, 1), flattening_gcd(f.base, pe, 2)));
    if (r && classify_summary(f.at(*r)).rank == 2) return from_root(r);
    return LocusVerdict::forbidden();
}

// Orbit 6: rank one is reached exactly where every 2-minor of every flattening vanishes.
LocusVerdict rank2_222(const ParametricTensor& f, const Tensor<Rational>& pe) {
    UniPoly g;
    for (size_t ax = 0; ax < 3; ++ax) g = gcd(g, flattening_gcd(f.base, pe, ax));
    return from_root(nonzero_root(g));
}

LocusVerdict dispatch_orbit(int n, const Tensor<Rational>& k, const RankOne<Rational>& p) {
    ParametricTensor f(k, p);
    Tensor<Rational> pe = p.expand();
    switch (n) {
        case 5: return locus_tangential(k, p);
        case 6: return rank2_222(f, pe);
        case 7:
        case 8:
        case 11:
        case 12: return generic_path(k, p);
        case 9:
        case 26: return dual_pairing_path(k, p);
        case 13:
        case 15:
        case 16:
        case 17: return rank4_233(f, pe);
        case 14:
        case 18: return rank3_233(f, pe);
        case 19:
        case 20:
        case 22:
        case 23: return rank4_234(f, pe);
        case 21: return rank5_234(f, pe);
        case 24:
        case 25: return rank5_235(f, pe);
    }
    throw Error(ErrorCode::UnsupportedOrbit, "no specialized procedure for orbit " + std::to_string(n));
}

bool all_concise_dims_two(const Tensor<Rational>& t) {
    for (size_t r : concise_reduce(t).core.shape())
        if (r != 2) return false;
    return true;
}

LocusVerdict specialized_path(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    ClassifyReport<Rational> rep;
    try {
        rep = classify(t);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnsupportedShape && t.order() >= 3 && all_concise_dims_two(t)) return locus_tangential(t, p);
        throw;
    }
    const ConciseReduction<Rational>& red = rep.reduction;
    std::vector<Vec<Rational>> core_p;
    for (size_t i = 0; i < t.order(); ++i) {
        Vec<Rational> c = red.left_inv[i] * p.factors[i];
        if (!(red.bases[i] * c == p.factors[i])) return LocusVerdict::forbidden();
        core_p.push_back(std::move(c));
    }
    const std::vector<size_t>& big = rep.permutation;
    Rational scale(1);
    for (size_t i = 0; i < t.order(); ++i)
        if (std::find(big.begin(), big.end(), i) == big.end()) scale *= core_p[i][0];
    if (big.empty()) return LocusVerdict::in(LambdaWitness::rational(red.core.entries()[0] / scale));
    RankOne<Rational> q;
    for (size_t a : big) q.factors.push_back(core_p[a]);
    for (auto& x : q.factors[0]) x *= scale;
    if (big.size() == 2) return locus_matrix(flattening(rep.canonical, 0), q.factors[0], q.factors[1]);
    return dispatch_orbit(rep.orbit.value, rep.canonical, q);
}

}  // namespace

LocusVerdict locus_matrix(const Mat<Rational>& a, const Vec<Rational>& u, const Vec<Rational>& v) {
    if (u.size() != a.rows() || v.size() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "u must have length rows(A) and v length cols(A)");
    if (a.is_zero()) throw Error(ErrorCode::ZeroTensor, "the zero matrix has an empty decomposition locus");
    if (vec_is_zero(u) || vec_is_zero(v)) throw Error(ErrorCode::ZeroTensor, "rank-one matrix has a zero factor");
    Mat<Rational> ap = pseudoinverse(a);
    Vec<Rational> x = ap * u;
    if (!(a * x == u) || !(ap * (a * v) == v)) return LocusVerdict::forbidden();
    Rational s = dot(v, x);
    if (s.is_zero()) return LocusVerdict::forbidden();
    return LocusVerdict::in(LambdaWitness::rational(s.inv()));
}

LocusVerdict locus_tangential(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    check_inputs(t, p);
    Decomposition d;
    try {
        d = decompose_tangential(t, p);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::TangencyPointRequested || e.code() == ErrorCode::OutsideConciseSpace) return LocusVerdict::forbidden();
        throw;
    }
    Rational kappa(1);
    for (auto& f : p.factors) {
        Rational s;
        unit_normalize(f, &s);
        kappa *= s;
    }
    for (auto& term : d.terms)
        if (same_point(term.rank_one, p)) return LocusVerdict::in(LambdaWitness::rational(term.coefficient / kappa));
    throw Error(ErrorCode::NotTangential, "decomposition lost the requested term");
}

LocusVerdict locus_membership(const Tensor<Rational>& t, const RankOne<Rational>& p, Strategy strategy) {
    check_inputs(t, p);
    return strategy == Strategy::Generic ? generic_path(t, p) : specialized_path(t, p);
}

bool verify_witness(const Tensor<Rational>& t, const RankOne<Rational>& p, const LambdaWitness& w) {
    check_inputs(t, p);
    size_t rt = classify_summary(t).rank;
    ParametricTensor f(t, p);
    if (w.value) return !w.value->is_zero() && classify_summary(f.at(*w.value)).rank + 1 == rt;
    if (w.minimal_poly.degree() < 2 || w.minimal_poly.coeff(0).is_zero()) return false;
    auto mod = AlgElem::make_modulus(w.minimal_poly, true);
    return classify_summary(f.at(AlgElem::generator(mod))).rank + 1 == rt;
}

}  // namespace declocus
