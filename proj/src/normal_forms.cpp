#include "declocus/normal_forms.hpp"

#include <array>

namespace declocus {

namespace {

using Entry = std::array<size_t, 3>;

struct Row {
    Shape shape;
    std::vector<Entry> ones;
    size_t brk, rk;
};

const std::vector<Row>& rows() {
    static const std::vector<Row> r = {
        {{2, 2, 2}, {{0, 0, 0}}, 1, 1},
        {{2, 2, 2}, {{0, 0, 0}, {1, 1, 0}}, 2, 2},
        {{2, 2, 2}, {{0, 0, 0}, {0, 1, 1}}, 2, 2},
        {{2, 2, 2}, {{0, 0, 0}, {1, 0, 1}}, 2, 2},
        {{2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}, 2, 3},
        {{2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}, 2, 2},
        {{2, 2, 3}, {{0, 0, 0}, {0, 1, 2}, {1, 0, 1}}, 3, 3},
        {{2, 2, 3}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 2}}, 3, 3},
        {{2, 2, 4}, {{0, 0, 0}, {0, 1, 2}, {1, 0, 1}, {1, 1, 3}}, 4, 4},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}}, 3, 3},
        {{2, 3, 2}, {{0, 0, 0}, {0, 2, 1}, {1, 1, 0}}, 3, 3},
        {{2, 3, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}}, 3, 3},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 2}, {1, 0, 1}, {1, 2, 2}}, 3, 4},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {1, 2, 2}}, 3, 3},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}}, 3, 4},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2}}, 3, 4},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 2, 2}}, 3, 4},
        {{2, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}, {1, 2, 2}}, 3, 3},
        {{2, 3, 4}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 3}, {1, 0, 1}, {1, 1, 2}}, 4, 4},
        {{2, 3, 4}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 3}, {1, 0, 1}}, 4, 4},
        {{2, 3, 4}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 3}, {1, 0, 1}, {1, 1, 3}}, 4, 5},
        {{2, 3, 4}, {{0, 0, 0}, {0, 1, 2}, {1, 0, 1}, {1, 2, 3}}, 4, 4},
        {{2, 3, 4}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2}, {1, 2, 3}}, 4, 4},
        {{2, 3, 5}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 4}, {1, 0, 1}, {1, 1, 3}}, 5, 5},
        {{2, 3, 5}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 3}, {1, 0, 1}, {1, 1, 2}, {1, 2, 4}}, 5, 5},
        {{2, 3, 6}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 4}, {1, 0, 1}, {1, 1, 3}, {1, 2, 5}}, 6, 6},
    };
    return r;
}

const Row& row(int n) {
    if (n < 1 || n > 26) throw Error(ErrorCode::UnsupportedOrbit, "orbit " + std::to_string(n) + " is not in 1..26");
    return rows()[static_cast<size_t>(n - 1)];
}

}  // namespace

TableRow table_row(int orbit) {
    const Row& r = row(orbit);
    return {orbit, r.brk, r.rk};
}

Shape normal_form_shape(int n) { return row(n).shape; }

Tensor<Rational> normal_form(int n) {
    const Row& r = row(n);
    Tensor<Rational> t(r.shape);
    for (auto& e : r.ones) t[{e[0], e[1], e[2]}] = Rational(1);
    return t;
}

bool is_matrix_row(int n) { return n == 1 || n == 2 || n == 3 || n == 4 || n == 10; }

Tensor<Rational> w_state(size_t k) {
    if (k < 2) throw Error(ErrorCode::WrongShape, "W-state needs order >= 2");
    Tensor<Rational> t(Shape(k, 2));
    for (size_t i = 0; i < k; ++i) {
        Index idx(k, 0);
        idx[i] = 1;
        t[idx] = Rational(1);
    }
    return t;
}

Vec<Rational> unit(size_t n, size_t i) {
    Vec<Rational> v(n, Rational(0));
    v.at(i) = Rational(1);
    return v;
}

}  // namespace declocus
