#ifndef DECLOCUS_NORMAL_FORMS_HPP
#define DECLOCUS_NORMAL_FORMS_HPP

#include <utility>

#include "tensor.hpp"

namespace declocus {

struct TableRow {
    int orbit;
    size_t border_rank;
    size_t rank;
};

// Border rank and rank of the 26 orbits of 2x2xn and 2x3xn tensors.
TableRow table_row(int orbit);

// The normal form T_n, n in 1..26, in its table presentation (0-based axes).
Tensor<Rational> normal_form(int n);
Shape normal_form_shape(int n);

// True for rows that are matrices presented as three-factor tensors.
bool is_matrix_row(int n);

// W-state of order k: the sum over axes i of e_0 ⊗ ... ⊗ e_1 (at i) ⊗ ... ⊗ e_0 in (C^2)^k,
// tangent to the Segre variety at e_0 ⊗ ... ⊗ e_0.
Tensor<Rational> w_state(size_t k);

// Unit vector of length n.
Vec<Rational> unit(size_t n, size_t i);

}  // namespace declocus

#endif
