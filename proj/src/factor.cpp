#include "declocus/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace declocus {

namespace {

const mpz_class kDivisorLimit("1000000000000");
constexpr size_t kKroneckerBudget = 200000;

// Divisors of |n| up to the limit, from a trial-division factorization.
std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0 || n > kDivisorLimit) return std::nullopt;
    unsigned long long m = n.get_ui();
    std::vector<std::pair<unsigned long long, int>> primes;
    for (unsigned long long p = 2; p * p <= m; p += p == 2 ? 1 : 2) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) primes.push_back({p, e});
    }
    if (m > 1) primes.push_back({m, 1});
    std::vector<unsigned long long> divs{1};
    for (auto [p, e] : primes) {
        size_t base = divs.size();
        unsigned long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<mpz_class> out;
    out.reserve(divs.size());
    for (auto d : divs) out.emplace_back(std::to_string(d));
    return out;
}

Rational eval_int(const std::vector<mpz_class>& g, const Rational& x) {
    Rational acc(0);
    for (size_t i = g.size(); i-- > 0;) acc = acc * x + Rational(g[i]);
    return acc;
}

// Numerical root candidates via Aberth iteration; only used to propose values
// that are then checked exactly.
std::vector<std::complex<long double>> approx_roots(const std::vector<mpz_class>& g) {
    int n = static_cast<int>(g.size()) - 1;
    std::vector<long double> c(g.size());
    for (size_t i = 0; i < g.size(); ++i) c[i] = static_cast<long double>(g[i].get_d());
    std::vector<std::complex<long double>> z(static_cast<size_t>(n));
    long double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::fabs(c[static_cast<size_t>(i)] / c.back()));
    radius = 1 + radius;
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::polar(radius * 0.5L, 2.0L * 3.14159265358979323846L * (i + 0.25L) / n);
    auto pv = [&](std::complex<long double> x) {
        std::complex<long double> p = 0, d = 0;
        for (int i = n; i >= 0; --i) {
            d = d * x + p;
            p = p * x + c[static_cast<size_t>(i)];
        }
        return std::make_pair(p, d);
    };
    for (int it = 0; it < 500; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            auto [p, d] = pv(z[static_cast<size_t>(i)]);
            if (std::abs(p) == 0) continue;
            std::complex<long double> ratio = p / d, sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<long double> w = ratio / (1.0L - ratio * sum);
            z[static_cast<size_t>(i)] -= w;
            moved = std::max(moved, std::abs(w) / (1 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (moved < 1e-17L) break;
    }
    return z;
}

// Searches a factor of degree d of a squarefree integer polynomial with no
// rational roots, by Kronecker interpolation at small integer points.
std::optional<UniPoly> kronecker_factor(const UniPoly& f, int d) {
    auto g = primitive_integer_coeffs(f);
    std::vector<long> xs;
    for (long x = 0; static_cast<int>(xs.size()) <= d; x = x > 0 ? -x : 1 - x) xs.push_back(x);
    std::vector<std::vector<mpz_class>> divs;
    size_t combos = 1;
    for (long x : xs) {
        Rational v = eval_int(g, Rational(x));
        auto dv = positive_divisors(v.num());
        if (!dv) return std::nullopt;
        divs.push_back(*dv);
        combos *= dv->size() * (divs.size() == 1 ? 1 : 2);
        if (combos > kKroneckerBudget) return std::nullopt;
    }
    std::vector<size_t> idx(xs.size(), 0);
    std::vector<int> sgn(xs.size(), 1);
    while (true) {
        // Lagrange interpolation through (x_i, +-d_i).
        UniPoly h;
        for (size_t i = 0; i < xs.size(); ++i) {
            UniPoly li(1);
            Rational den(1);
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                li = li * UniPoly::linear_root(Rational(xs[j]));
                den *= Rational(xs[i] - xs[j]);
            }
            Rational yi = Rational(divs[i][idx[i]]) * Rational(sgn[i]);
            h += li * (yi / den);
        }
        if (h.degree() == d && (f % h).is_zero()) return h.monic();
        size_t k = 0;
        for (; k < xs.size(); ++k) {
            if (k > 0 && sgn[k] == 1) {
                sgn[k] = -1;
                break;
            }
            if (k > 0) sgn[k] = 1;
            if (++idx[k] < divs[k].size()) break;
            idx[k] = 0;
        }
        if (k == xs.size()) break;
    }
    return std::nullopt;
}

// Splits a squarefree polynomial without rational roots into irreducibles.
void split_no_roots(const UniPoly& f, std::vector<Factor>& out) {
    int n = f.degree();
    if (n <= 3) {
        out.push_back({f.monic(), 1, true});
        return;
    }
    if (n > 6) {
        out.push_back({f.monic(), 1, false});
        return;
    }
    for (int d = 2; d <= n / 2; ++d) {
        auto h = kronecker_factor(f, d);
        if (h) {
            split_no_roots(*h, out);
            split_no_roots(f / *h, out);
            return;
        }
    }
    out.push_back({f.monic(), 1, true});
}

}  // namespace

bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto c = a.coeff(i) <=> b.coeff(i);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<mpz_class> primitive_integer_coeffs(const UniPoly& f) {
    mpz_class l = 1;
    for (auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> g;
    mpz_class content = 0;
    for (auto& c : f.coeffs()) {
        mpz_class v = c.num() * (l / c.den());
        g.push_back(v);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (content != 0)
        for (auto& v : g) v /= content;
    if (!g.empty() && g.back() < 0)
        for (auto& v : g) v = -v;
    return g;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
    std::vector<Rational> roots;
    if (f.degree() <= 0) return roots;
    UniPoly h = squarefree_part(f);
    if (h.coeff(0).is_zero()) {
        roots.emplace_back(0);
        h = h / UniPoly::x();
    }
    while (h.degree() >= 1) {
        if (h.degree() == 1) {
            roots.push_back(-h.coeff(0) / h.coeff(1));
            break;
        }
        auto g = primitive_integer_coeffs(h);
        std::optional<Rational> found;
        auto pd = positive_divisors(g.front()), qd = positive_divisors(g.back());
        if (pd && qd) {
            // p/q is a root only if p - q divides g(1) and p + q divides g(-1).
            mpz_class g1 = 0, gm1 = 0;
            for (size_t i = 0; i < g.size(); ++i) {
                g1 += g[i];
                gm1 += i % 2 ? mpz_class(-g[i]) : g[i];
            }
            auto divides = [](const mpz_class& d, const mpz_class& v) { return d == 0 ? v == 0 : mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0; };
            for (auto& q : *qd) {
                for (auto& p : *pd) {
                    for (int s : {1, -1}) {
                        mpz_class ps = p * s;
                        if (gcd(ps, q) != 1 || !divides(ps - q, g1) || !divides(ps + q, gm1)) continue;
                        Rational r(ps, q);
                        if (eval_int(g, r).is_zero()) {
                            found = r;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
        } else {
            // Any rational root r has g.back()*r integral.
            for (auto& z : approx_roots(g)) {
                if (std::fabs(z.imag()) > 1e-6L * (1 + std::fabs(z.real()))) continue;
                long double scaled = z.real() * static_cast<long double>(g.back().get_d());
                mpz_class n(static_cast<double>(std::round(scaled)));
                for (long off : {0L, -1L, 1L}) {
                    Rational r(mpz_class(n + off), g.back());
                    if (eval_int(g, r).is_zero()) {
                        found = r;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) break;
        roots.push_back(*found);
        h = h / UniPoly::linear_root(*found);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Factor> factor_best_effort(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::AllZero, "cannot factor the zero polynomial");
    std::vector<Factor> out;
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        UniPoly rest = part;
        std::vector<Factor> pieces;
        for (auto& r : rational_roots(part)) {
            pieces.push_back({UniPoly::linear_root(r), 1, true});
            rest = rest / UniPoly::linear_root(r);
        }
        if (rest.degree() > 0) split_no_roots(rest, pieces);
        for (auto& p : pieces) out.push_back({p.poly, mult, p.irreducible});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

std::vector<std::pair<UniPoly, int>> upoly_factor_small(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::AllZero, "cannot factor the zero polynomial");
    if (f.degree() > 6) throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(f.degree()) + " > 6");
    std::vector<std::pair<UniPoly, int>> out;
    for (auto& fa : factor_best_effort(f)) out.push_back({fa.poly, fa.multiplicity});
    return out;
}

std::vector<UniPoly> coprime_base(const std::vector<UniPoly>& polys) {
    std::vector<UniPoly> base;
    for (auto& p0 : polys) {
        if (p0.degree() <= 0) continue;
        UniPoly p = squarefree_part(p0);
        std::vector<UniPoly> next;
        for (auto& b : base) {
            if (p.degree() <= 0) {
                next.push_back(b);
                continue;
            }
            UniPoly g = gcd(p, b);
            if (g.degree() <= 0) {
                next.push_back(b);
                continue;
            }
            UniPoly rest = (b / g).monic();
            next.push_back(g);
            if (rest.degree() > 0) next.push_back(rest);
            p = (p / g).monic();
        }
        if (p.degree() > 0) next.push_back(p.monic());
        base = std::move(next);
    }
    std::sort(base.begin(), base.end(), poly_less);
    return base;
}

}  // namespace declocus
