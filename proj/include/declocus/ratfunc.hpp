#ifndef DECLOCUS_RATFUNC_HPP
#define DECLOCUS_RATFUNC_HPP

#include <set>
#include <string>
#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace declocus {

struct PolyLess {
    bool operator()(const UniPoly& a, const UniPoly& b) const { return poly_less(a, b); }
};

// Records every nonconstant polynomial whose nonvanishing a computation over
// Q(λ) relied on. Specializing λ away from their roots replays the same branches.
struct ZeroTestLog {
    std::set<UniPoly, PolyLess> polys;
    void add(const UniPoly& p) {
        if (p.degree() > 0) polys.insert(p.monic());
    }
};

namespace detail {
inline ZeroTestLog*& current_zero_log() {
    thread_local ZeroTestLog* log = nullptr;
    return log;
}
}  // namespace detail

// Installs a log for the current thread for the lifetime of the scope.
class ZeroTestScope {
public:
    explicit ZeroTestScope(ZeroTestLog& log) : prev_(detail::current_zero_log()) { detail::current_zero_log() = &log; }
    ~ZeroTestScope() { detail::current_zero_log() = prev_; }
    ZeroTestScope(const ZeroTestScope&) = delete;
    ZeroTestScope& operator=(const ZeroTestScope&) = delete;

private:
    ZeroTestLog* prev_;
};

// Element of the rational function field Q(λ): num/den with den monic and
// gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const UniPoly& p) : num_(p), den_(1) {}
    RatFunc(const UniPoly& n, const UniPoly& d) {
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        num_ = n;
        den_ = d;
        normalize();
    }
    static RatFunc lambda() { return RatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    bool is_zero() const {
        if (num_.is_zero()) return true;
        log_parts();
        return false;
    }
    RatFunc inv() const {
        if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
        log_parts();
        return RatFunc(den_, num_);
    }

    Rational eval(const Rational& x) const { return num_.eval(x) / den_.eval(x); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) {
        if (den_.is_constant() && o.den_.is_constant()) {
            num_ += o.num_;
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        normalize();
        return *this;
    }
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o) {
        num_ = num_ * o.num_;
        if (den_.is_constant() && o.den_.is_constant()) return *this;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inv(); }
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void log_parts() const {
        ZeroTestLog* log = detail::current_zero_log();
        if (!log) return;
        log->add(num_);
        log->add(den_);
    }
    void normalize() {
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        if (!den_.is_constant()) {
            UniPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        Rational l = den_.lead();
        if (!l.is_one()) {
            Rational il = l.inv();
            num_ *= il;
            den_ *= il;
        }
    }
    UniPoly num_, den_;
};

}  // namespace declocus

#endif
