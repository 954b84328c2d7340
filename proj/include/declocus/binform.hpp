#ifndef DECLOCUS_BINFORM_HPP
#define DECLOCUS_BINFORM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "mat.hpp"
#include "poly.hpp"

namespace declocus {

// Homogeneous form of degree d in (u, v); coefficient i multiplies u^(d-i) v^i.
// The zero form of any degree has all coefficients zero.
template <class S>
class BinaryForm {
public:
    BinaryForm() : c_{S(0)} {}
    explicit BinaryForm(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error(ErrorCode::ShapeMismatch, "binary form needs degree+1 coefficients");
    }
    static BinaryForm zero(int d) { return BinaryForm(std::vector<S>(static_cast<size_t>(d) + 1, S(0))); }
    static BinaryForm constant(const S& c) { return BinaryForm(std::vector<S>{c}); }
    // a u + b v
    static BinaryForm linear(const S& a, const S& b) { return BinaryForm(std::vector<S>{a, b}); }
    static BinaryForm u() { return linear(S(1), S(0)); }
    static BinaryForm v() { return linear(S(0), S(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    const S& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Largest k with v^k dividing the form (nonzero forms only).
    int v_valuation() const {
        int k = 0;
        while (k <= degree() && c_[static_cast<size_t>(k)].is_zero()) ++k;
        return k;
    }
    // f(u, 1) as a polynomial in u.
    Poly<S> dehomogenize() const {
        std::vector<S> p(c_.size(), S(0));
        for (int i = 0; i <= degree(); ++i) p[static_cast<size_t>(degree() - i)] = c_[static_cast<size_t>(i)];
        return Poly<S>(std::move(p));
    }
    // Homogenizes p(u) to degree d >= deg p.
    static BinaryForm homogenize(const Poly<S>& p, int d) {
        BinaryForm f = zero(d);
        for (int k = 0; k <= p.degree(); ++k) f.c_[static_cast<size_t>(d - k)] = p.coeff(k);
        return f;
    }

    S eval(const S& u, const S& v) const {
        S acc(0), vp(1);
        std::vector<S> up(c_.size(), S(1));
        for (size_t i = 1; i < c_.size(); ++i) up[i] = up[i - 1] * u;
        for (int i = 0; i <= degree(); ++i) {
            acc += c_[static_cast<size_t>(i)] * up[static_cast<size_t>(degree() - i)] * vp;
            vp *= v;
        }
        return acc;
    }

    BinaryForm d_du() const {
        if (degree() == 0) return zero(0);
        std::vector<S> r;
        for (int i = 0; i < degree(); ++i) r.push_back(S(degree() - i) * c_[static_cast<size_t>(i)]);
        return BinaryForm(std::move(r));
    }
    BinaryForm d_dv() const {
        if (degree() == 0) return zero(0);
        std::vector<S> r;
        for (int i = 1; i <= degree(); ++i) r.push_back(S(i) * c_[static_cast<size_t>(i)]);
        return BinaryForm(std::move(r));
    }

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) {
        check_degree(a, b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) {
        check_degree(a, b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return BinaryForm(std::move(r));
    }
    friend BinaryForm operator*(const S& s, BinaryForm a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        int d = degree();
        for (int i = 0; i <= d; ++i) {
            if (c_[static_cast<size_t>(i)].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[static_cast<size_t>(i)].str();
            int pu = d - i, pv = i;
            if (pu) out += "*u" + (pu > 1 ? "^" + std::to_string(pu) : std::string());
            if (pv) out += "*v" + (pv > 1 ? "^" + std::to_string(pv) : std::string());
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check_degree(const BinaryForm& a, const BinaryForm& b) {
        if (a.c_.size() != b.c_.size()) throw Error(ErrorCode::ShapeMismatch, "binary forms of different degree");
    }
    std::vector<S> c_;
};

// Monic gcd (leading u-coefficient 1, or v^k). Zero forms are skipped.
template <class S>
BinaryForm<S> bform_gcd(const std::vector<BinaryForm<S>>& fs) {
    std::optional<Poly<S>> g;
    int val = -1;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        int k = f.v_valuation();
        val = val < 0 ? k : std::min(val, k);
        Poly<S> p = f.dehomogenize();
        g = g ? gcd(*g, p) : p.monic();
    }
    if (!g) throw Error(ErrorCode::AllZero, "gcd of zero forms");
    BinaryForm<S> h = BinaryForm<S>::homogenize(*g, g->degree());
    for (int i = 0; i < val; ++i) h = h * BinaryForm<S>::v();
    return h;
}

// Res(f_u, f_v) / d^(d-2) via the Sylvester matrix of the two degree d-1 forms.
// For cubics this is -c2^2c3^2 + 4c1c3^3 + 4c2^3c4 - 18c1c2c3c4 + 27c1^2c4^2 on
// c4u^3 - c3u^2v + c2uv^2 - c1v^3; for quadratics au^2+buv+cv^2 it is 4ac - b^2.
template <class S>
S bform_discriminant(const BinaryForm<S>& f) {
    int d = f.degree();
    if (d < 2) throw Error(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 2");
    BinaryForm<S> a = f.d_du(), b = f.d_dv();
    size_t n = static_cast<size_t>(2 * (d - 1));
    Mat<S> syl(n, n);
    for (int r = 0; r < d - 1; ++r)
        for (int i = 0; i < d; ++i) {
            syl(static_cast<size_t>(r), static_cast<size_t>(r + i)) = a.coeff(i);
            syl(static_cast<size_t>(r + d - 1), static_cast<size_t>(r + i)) = b.coeff(i);
        }
    S res = mat_det(syl);
    S scale(1);
    for (int i = 0; i < d - 2; ++i) scale *= S(d);
    return res / scale;
}

// gcd(f, f_u, f_v): the product of the repeated linear factors, each to one
// less than its multiplicity.
template <class S>
BinaryForm<S> bform_repeated_part(const BinaryForm<S>& f) {
    return bform_gcd(std::vector<BinaryForm<S>>{f, f.d_du(), f.d_dv()});
}

// If f = c * l^d for a linear form l, returns l (normalized by bform_gcd rules).
template <class S>
std::optional<BinaryForm<S>> bform_pure_power_root(const BinaryForm<S>& f, int d) {
    if (f.is_zero() || d < 1 || f.degree() != d) return std::nullopt;
    if (d == 1) return bform_gcd(std::vector<BinaryForm<S>>{f});
    BinaryForm<S> g = bform_repeated_part(f);
    if (g.degree() != d - 1) return std::nullopt;
    // g = l^(d-1) up to scale; f/g is proportional to l.
    Poly<S> q = f.dehomogenize() / g.dehomogenize();
    int vq = f.v_valuation() - g.v_valuation();
    BinaryForm<S> l = BinaryForm<S>::homogenize(q, q.degree());
    for (int i = 0; i < vq; ++i) l = l * BinaryForm<S>::v();
    return bform_gcd(std::vector<BinaryForm<S>>{l});
}

template <class S>
bool bform_is_pure_power(const BinaryForm<S>& f, int d) {
    return bform_pure_power_root(f, d).has_value();
}

template <class S>
struct RootFactor {
    BinaryForm<S> factor;
    int multiplicity;
};

// Squarefree decomposition into forms (not necessarily irreducible); works over
// any field.
template <class S>
std::vector<RootFactor<S>> bform_squarefree_profile(const BinaryForm<S>& f) {
    if (f.is_zero()) throw Error(ErrorCode::AllZero, "profile of the zero form");
    std::vector<RootFactor<S>> out;
    for (auto& [p, m] : squarefree_decomposition(f.dehomogenize()))
        out.push_back({BinaryForm<S>::homogenize(p, p.degree()), m});
    int k = f.v_valuation();
    if (k > 0) out.push_back({BinaryForm<S>::v(), k});
    return out;
}

// Irreducible factorization over Q: factors of f(u,1), then the power of v.
inline std::vector<RootFactor<Rational>> bform_root_profile(const BinaryForm<Rational>& f) {
    if (f.is_zero()) throw Error(ErrorCode::AllZero, "profile of the zero form");
    std::vector<RootFactor<Rational>> out;
    UniPoly p = f.dehomogenize();
    if (p.degree() > 0)
        for (auto& [q, m] : upoly_factor_small(p)) out.push_back({BinaryForm<Rational>::homogenize(q, q.degree()), m});
    int k = f.v_valuation();
    if (k > 0) out.push_back({BinaryForm<Rational>::v(), k});
    return out;
}

}  // namespace declocus

#endif
