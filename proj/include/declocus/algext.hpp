#ifndef DECLOCUS_ALGEXT_HPP
#define DECLOCUS_ALGEXT_HPP

#include <memory>
#include <string>

#include "poly.hpp"

namespace declocus {

// Defining polynomial of a simple extension Q[x]/(g).
struct Modulus {
    UniPoly g;          // monic, squarefree, degree >= 1
    bool irreducible;   // when false, zero tests may reveal a factor
};

// Thrown when a computation in Q[x]/(g) hits a nonzero element sharing a factor
// with g; the caller splits g along `factor` and retries on each part.
class ZeroDivisorError : public Error {
public:
    explicit ZeroDivisorError(UniPoly factor)
        : Error(ErrorCode::ZeroDivisor, "modulus splits off " + factor.str("x")), factor_(std::move(factor)) {}
    const UniPoly& factor() const { return factor_; }

private:
    UniPoly factor_;
};

// Element of Q[x]/(g). A null modulus marks a plain rational constant that
// adopts the modulus of whatever it is combined with.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(int c) : rep_(Rational(c)) {}
    AlgElem(const Rational& c) : rep_(c) {}
    AlgElem(UniPoly rep, std::shared_ptr<const Modulus> mod) : mod_(std::move(mod)) {
        rep_ = mod_ ? rep % mod_->g : std::move(rep);
    }

    static std::shared_ptr<const Modulus> make_modulus(const UniPoly& g, bool irreducible) {
        if (g.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "modulus must have degree >= 1");
        return std::make_shared<const Modulus>(Modulus{g.monic(), irreducible});
    }
    // The class of x in Q[x]/(g).
    static AlgElem generator(std::shared_ptr<const Modulus> mod) { return AlgElem(UniPoly::x(), std::move(mod)); }

    const UniPoly& rep() const { return rep_; }
    const std::shared_ptr<const Modulus>& modulus() const { return mod_; }

    bool is_zero() const {
        if (rep_.is_zero()) return true;
        if (rep_.is_constant() || !mod_ || mod_->irreducible) return false;
        UniPoly g = gcd(rep_, mod_->g);
        if (g.degree() > 0) throw ZeroDivisorError(g);
        return false;
    }

    AlgElem inv() const {
        if (rep_.is_zero()) throw Error(ErrorCode::NotInvertible, "inverse of zero in extension");
        if (rep_.is_constant()) return AlgElem(UniPoly(rep_.coeff(0).inv()), mod_);
        auto x = xgcd(rep_, mod_->g);
        if (x.g.degree() > 0) throw ZeroDivisorError(x.g);
        return AlgElem(x.s, mod_);
    }

    AlgElem operator-() const { return AlgElem(-rep_, mod_, raw_tag{}); }
    AlgElem& operator+=(const AlgElem& o) {
        adopt(o);
        rep_ += o.rep_;
        return *this;
    }
    AlgElem& operator-=(const AlgElem& o) {
        adopt(o);
        rep_ -= o.rep_;
        return *this;
    }
    AlgElem& operator*=(const AlgElem& o) {
        adopt(o);
        rep_ = rep_ * o.rep_;
        if (mod_ && rep_.degree() >= mod_->g.degree()) rep_ = rep_ % mod_->g;
        return *this;
    }
    AlgElem& operator/=(const AlgElem& o) { return *this *= o.inv(); }
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(AlgElem a, const AlgElem& b) { return a *= b; }
    friend AlgElem operator/(AlgElem a, const AlgElem& b) { return a /= b; }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return (a - b).is_zero(); }

    std::string str() const { return rep_.str("x"); }

private:
    struct raw_tag {};
    AlgElem(UniPoly rep, std::shared_ptr<const Modulus> mod, raw_tag) : rep_(std::move(rep)), mod_(std::move(mod)) {}
    void adopt(const AlgElem& o) {
        if (!mod_ && o.mod_) mod_ = o.mod_;
    }
    UniPoly rep_;
    std::shared_ptr<const Modulus> mod_;
};

// y with x*y = 1 in the extension.
inline AlgElem algext_inverse(const AlgElem& x) { return x.inv(); }

}  // namespace declocus

#endif
