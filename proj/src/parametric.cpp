#include "declocus/parametric.hpp"

namespace declocus {

Rational avoiding_point(const std::vector<UniPoly>& polys) {
    for (long k = 1;; ++k) {
        for (long s : {k, -k}) {
            Rational x(s);
            bool ok = true;
            for (auto& p : polys)
                if (p.eval(x).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) return x;
        }
    }
}

std::vector<ParametricEntry> classify_at_roots(const ParametricTensor& f, const UniPoly& q, bool irreducible) {
    if (q.degree() == 1) {
        Rational root = -q.coeff(0) / q.coeff(1);
        return {{q.monic(), true, classify_summary(f.at(root))}};
    }
    if (!irreducible) {
        auto roots = rational_roots(q);
        if (!roots.empty()) {
            std::vector<ParametricEntry> out;
            UniPoly rest = q;
            for (auto& r : roots) {
                out.push_back({UniPoly::linear_root(r), true, classify_summary(f.at(r))});
                rest = rest / UniPoly::linear_root(r);
            }
            if (rest.degree() > 0) {
                auto more = classify_at_roots(f, rest.monic(), false);
                out.insert(out.end(), more.begin(), more.end());
            }
            return out;
        }
    }
    auto mod = AlgElem::make_modulus(q, irreducible);
    try {
        return {{q.monic(), irreducible, classify_summary(f.at(AlgElem::generator(mod)))}};
    } catch (const ZeroDivisorError& z) {
        UniPoly a = z.factor().monic(), b = (q / z.factor()).monic();
        auto out = classify_at_roots(f, a, false);
        auto rest = classify_at_roots(f, b, false);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
}

ParametricReport classify_parametric(const ParametricTensor& f) {
    if (f.base.is_zero() && f.direction.expand().is_zero())
        throw Error(ErrorCode::ZeroTensor, "parametric family is identically zero");
    ParametricReport rep;
    ZeroTestLog log;
    {
        ZeroTestScope scope(log);
        rep.generic = classify_summary(f.over_function_field());
    }
    std::vector<UniPoly> polys(log.polys.begin(), log.polys.end());
    polys.push_back(UniPoly::x());
    std::vector<UniPoly> all_factors;
    for (auto& b : coprime_base(polys)) {
        for (auto& e : classify_at_roots(f, b, false)) {
            all_factors.push_back(e.factor);
            bool is_lambda = e.factor == UniPoly::x();
            if (!is_lambda && e.summary == rep.generic) {
                rep.considered.push_back(std::move(e));
                continue;
            }
            for (auto& fac : factor_best_effort(e.factor)) {
                ParametricEntry x{fac.poly, fac.irreducible, e.summary};
                rep.exceptional.push_back(x);
                rep.considered.push_back(std::move(x));
            }
        }
    }
    rep.generic_point = avoiding_point(all_factors);
    return rep;
}

}  // namespace declocus
