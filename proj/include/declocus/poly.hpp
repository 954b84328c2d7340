#ifndef DECLOCUS_POLY_HPP
#define DECLOCUS_POLY_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace declocus {

// Dense univariate polynomial over a field F, lowest degree first.
// The coefficient vector never carries a zero leading entry.
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(const F& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(int c) : Poly(F(c)) {}
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const F& c, int n) {
        if (c.is_zero()) return Poly();
        std::vector<F> v(static_cast<size_t>(n) + 1, F(0));
        v.back() = c;
        Poly p;
        p.c_ = std::move(v);
        return p;
    }
    static Poly x() { return monomial(F(1), 1); }
    // x - r
    static Poly linear_root(const F& r) { return Poly(std::vector<F>{-r, F(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const F& lead() const { return c_.back(); }
    F coeff(int i) const {
        return i >= 0 && static_cast<size_t>(i) < c_.size() ? c_[static_cast<size_t>(i)] : F(0);
    }
    const std::vector<F>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const F& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        F il = b.lead().inv();
        std::vector<F> r = a.c_;
        std::vector<F> q(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            F t = r[static_cast<size_t>(k + b.degree())] * il;
            q[static_cast<size_t>(k)] = t;
            if (t.is_zero()) continue;
            for (int j = 0; j <= b.degree(); ++j)
                r[static_cast<size_t>(k + j)] -= t * b.c_[static_cast<size_t>(j)];
        }
        r.resize(static_cast<size_t>(b.degree()));
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
        return true;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> v(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(v));
    }
    F eval(const F& x) const {
        F acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    // Substitutes a polynomial for the variable.
    Poly compose(const Poly& g) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    std::string str(const std::string& var = "λ") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[i].str();
            if (i == 1) os << "*" << var;
            if (i > 1) os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

using UniPoly = Poly<Rational>;

// Monic gcd; gcd(0,0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
struct XGcd {
    Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
XGcd<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F il = r0.lead().inv();
    return {r0 * il, s0 * il, t0 * il};
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

// Yun's algorithm: f = lc * prod a_i^i with a_i squarefree and pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() <= 0) return out;
    Poly<F> fm = f.monic();
    Poly<F> d = fm.derivative();
    Poly<F> a = gcd(fm, d);
    Poly<F> b = fm / a, c = d / a;
    int i = 1;
    while (b.degree() > 0) {
        Poly<F> e = c - b.derivative();
        Poly<F> g = gcd(b, e);
        if (g.degree() > 0) out.push_back({g, i});
        b = b / g;
        c = e / g;
        ++i;
    }
    return out;
}

}  // namespace declocus

#endif
