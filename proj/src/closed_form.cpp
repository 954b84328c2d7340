#include "declocus/closed_form.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "declocus/normal_forms.hpp"

namespace declocus {

namespace {

// Every listed polynomial vanishes at the point.
bool Z(std::initializer_list<Rational> fs) {
    return std::all_of(fs.begin(), fs.end(), [](const Rational& f) { return f.is_zero(); });
}

// 1-based coordinates a_i, b_j, c_k of P = a ⊗ b ⊗ c.
struct Point {
    const RankOne<Rational>& p;
    Rational a(size_t i) const { return p.factors[0][i - 1]; }
    Rational b(size_t i) const { return p.factors[1][i - 1]; }
    Rational c(size_t i) const { return p.factors[2][i - 1]; }
};

bool forbidden9(const Point& x) {
    return Z({x.a(1) * x.b(1) * x.c(1) + x.a(2) * x.b(1) * x.c(2) + x.a(1) * x.b(2) * x.c(3) + x.a(2) * x.b(2) * x.c(4)});
}

bool forbidden26(const Point& x) {
    return Z({x.a(1) * x.b(1) * x.c(1) + x.a(1) * x.b(2) * x.c(3) + x.a(1) * x.b(3) * x.c(5) + x.a(2) * x.b(1) * x.c(2) +
              x.a(2) * x.b(2) * x.c(4) + x.a(2) * x.b(3) * x.c(6)});
}

bool forbidden13(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3), c1 = x.c(1), c2 = x.c(2), c3 = x.c(3);
    bool v = Z({a1 * b1 * c1 + a2 * b1 * c2 + a1 * b2 * c3 + a2 * b3 * c3});
    bool first = (Z({a1 * c1 + a2 * c2}) || Z({a1 * b2 + a2 * b3})) && !(Z({b2, b3}) || Z({c1, c2}));
    bool second = (Z({b3 * c1 - b2 * c2}) || Z({a1 * c1 + a2 * c2}) || Z({a1 * b2 + a2 * b3})) && v;
    return first || second;
}

bool forbidden15(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3), c1 = x.c(1), c2 = x.c(2), c3 = x.c(3);
    bool v = Z({a1 * b1 * c1 + a2 * b1 * c2 + a1 * b2 * c2 + a1 * b3 * c3});
    bool z = Z({a2 * b2 * c1});
    bool kept = (z && !(Z({b2, b3, c1, c3}) || Z({a2, b2}) || Z({a2, c1}))) || (z && v);
    bool removed = (Z({a2}) && !Z({a1 * b2 * c1})) || (Z({b2, b3}) && !Z({a2 * b1 * c1})) || (Z({c1, c3}) && !Z({a2 * b2 * c2}));
    return kept && !removed;
}

bool forbidden16(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3), c1 = x.c(1), c2 = x.c(2), c3 = x.c(3);
    bool v = Z({a1 * b1 * c1 + a1 * b2 * c2 + a1 * b3 * c3 + a2 * b1 * c2 + a2 * b2 * c3});
    bool z3 = Z({b3 * c1, a2 * b3 * c2, a2 * b2 * c1});
    bool kept = (z3 && !(Z({a2, b2, b3}) || Z({a2, c1, c2}))) || (z3 && v);
    bool removed = Z({b3, c1}) && !Z({a2 * b1 * c2 + a2 * b2 * c3}) && !Z({a2 * b2 * c2});
    return kept && !removed;
}

bool forbidden17(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3), c1 = x.c(1), c2 = x.c(2), c3 = x.c(3);
    bool v = Z({a1 * b1 * c1 + a1 * b2 * c2 + a2 * b1 * c2 + a2 * b3 * c3});
    bool z3 = Z({b2 * c1, a2 * b2 * c2, a2 * b1 * c1});
    bool generic = !(Z({a1, b1, b2}) || Z({a2, b2, b3}) || Z({a1, c1, c2}) || Z({a2, c1, c3}));
    bool removed = Z({b2, c1}) && !Z({a2 * b1 * c2 * (b1 * c2 + b3 * c3)});
    return ((z3 && generic) || (z3 && v)) && !removed;
}

bool decomposition19(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4);
    bool base = Z({b2 * b3, a2 * b3, a2 * b1 - a1 * b2}) && !Z({a1 * b1 * c1 + a1 * b2 * c2 + a2 * b2 * c3 + a1 * b3 * c4});
    bool removed = Z({c1 * (Rational(4) * c1 * c3 - c2 * c2)}) && !(Z({b3, c1, c4}) && !Z({c2}));
    return (base && !removed) || (base && Z({a2, c1, c2, c3}));
}

bool decomposition20(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4);
    bool v = Z({a1 * b1 * c1 + a2 * b1 * c2 + a1 * b2 * c3 + a1 * b3 * c4});
    bool first = Z({b3, b2, c1, c3, c4}) && !Z({a2 * b1 * c2});
    bool base = Z({a2 * b3, a2 * b2}) && !v;
    return first || (base && !Z({c1})) || (base && Z({a2, c1, c2}));
}

bool decomposition22(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4);
    bool v = Z({a1 * b1 * c1 + a2 * b1 * c2 + a1 * b2 * c3 + a2 * b3 * c4});
    bool base = Z({b2 * b3, a1 * b3, a2 * b2}) && !v;
    bool jet = (Z({b2, c1, c3}) || Z({b3, c2, c4}));
    return (base && !Z({c1 * c2})) || (base && jet) || (base && Z({c2, c1, c3 * c4, a1 * c4, a2 * c3, a1 * a2}));
}

bool decomposition23(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4);
    Rational q = a1 * b1 * c1 + a1 * b2 * c2 + a1 * b3 * c3 + a2 * b3 * c4;
    Rational delta = -c2 * c2 * c3 * c3 + Rational(4) * c1 * c3 * c3 * c3 + Rational(4) * c2 * c2 * c2 * c4 -
                     Rational(18) * c1 * c2 * c3 * c4 + Rational(27) * c1 * c1 * c4 * c4;
    return Z({b2 * b2 - b1 * b3, a2 * b2 - a1 * b3, a2 * b1 - a1 * b2}) && !Z({q}) && !Z({delta});
}

bool forbidden21(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4);
    Rational alpha = a1 * b1 * c1 * c1 + a2 * b1 * c1 * c2 + a1 * b2 * c1 * c3 + a2 * b2 * c2 * c3;
    bool jet = Z({b3}) && Z({alpha});
    bool first = (jet && !Z({c1})) && (Z({b1, b2}) || Z({b2, a1 * c1 + a2 * c2}) || Z({a2, b1 * c1 + b2 * c3}));
    bool second = (jet && Z({c1})) &&
                  (Z({b2, a2 * b1 * c2}) || Z({a2, a1 * b2 * c3}) || (Z({c3}) && !(Z({b2}) && !Z({a2 * b1 * c2}))));
    bool third = (Z({a2}) && !Z({b3})) && Z({c1, c3}) && !Z({c2});
    bool removed = Z({b3, c1, c3}) && !Z({a2 * (b1 * c2 + b2 * c4)});
    return (first || second || third) && !removed;
}

bool forbidden24(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4), c5 = x.c(5);
    bool v = Z({a1 * b1 * c1 + a2 * b1 * c2 + a1 * b2 * c3 + a2 * b2 * c4 + a1 * b3 * c5});
    bool in = (Z({a2, c1, c2, c3, c4}) && !Z({a1 * b3 * c5})) || (Z({a2 * b3}) && !v && !(Z({c1, c3}) && !Z({c5})));
    return !in;
}

bool forbidden25(const Point& x) {
    Rational a1 = x.a(1), a2 = x.a(2), b1 = x.b(1), b2 = x.b(2), b3 = x.b(3);
    Rational c1 = x.c(1), c2 = x.c(2), c3 = x.c(3), c4 = x.c(4), c5 = x.c(5);
    Rational q = a1 * b1 * c1 + a1 * b2 * c2 + a2 * b2 * c3 + a1 * b3 * c4 + a2 * b3 * c5;
    bool in = Z({a2 * b1 - a1 * b2}) && !Z({q}) && !Z({c4, c5, c2 * c2 - Rational(4) * c1 * c3});
    return !in;
}

}  // namespace

const std::vector<int>& closed_form_orbits() {
    static const std::vector<int> orbits{9, 13, 15, 16, 17, 19, 20, 21, 22, 23, 24, 25, 26};
    return orbits;
}

bool closed_form_predicate(int orbit, const RankOne<Rational>& p) {
    const auto& os = closed_form_orbits();
    if (std::find(os.begin(), os.end(), orbit) == os.end())
        throw Error(ErrorCode::UnsupportedOrbit, "no closed-form locus for orbit " + std::to_string(orbit));
    if (p.shape() != normal_form_shape(orbit))
        throw Error(ErrorCode::ShapeMismatch, "rank-one shape " + shape_str(p.shape()) + " does not match the normal form " + shape_str(normal_form_shape(orbit)));
    Point x{p};
    switch (orbit) {
        case 9: return forbidden9(x);
        case 13: return forbidden13(x);
        case 15: return forbidden15(x);
        case 16: return forbidden16(x);
        case 17: return forbidden17(x);
        case 19: return !decomposition19(x);
        case 20: return !decomposition20(x);
        case 21: return forbidden21(x);
        case 22: return !decomposition22(x);
        case 23: return !decomposition23(x);
        case 24: return forbidden24(x);
        case 25: return forbidden25(x);
        default: return forbidden26(x);
    }
}

}  // namespace declocus
