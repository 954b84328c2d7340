#ifndef DECLOCUS_RATIONAL_HPP
#define DECLOCUS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace declocus {

// Exact rational number backed by GMP; always kept in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q" or "p" with an optional leading sign; no decimals or blanks.
    static Rational parse(std::string_view s) {
        auto digits = [](std::string_view t, bool allow_sign) {
            if (t.empty()) return false;
            size_t i = 0;
            if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
        if (!digits(ns, true) || !digits(ds, false))
            throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
        std::string n(ns);
        if (n[0] == '+') n.erase(0, 1);
        mpz_class num(n, 10), den(std::string(ds), 10);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    Rational inv() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        Rational r;
        mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }
    Rational& operator+=(const Rational& o) { mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
        mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

}  // namespace declocus

#endif
