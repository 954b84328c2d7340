#ifndef DECLOCUS_CLOSED_FORM_HPP
#define DECLOCUS_CLOSED_FORM_HPP

#include <vector>

#include "tensor.hpp"

namespace declocus {

// Orbits with a closed-form description of the forbidden locus of T_n.
const std::vector<int>& closed_form_orbits();

// Membership of P = a ⊗ b ⊗ c, given in the coordinates of the normal form
// T_n, in the forbidden locus of T_n, by direct evaluation of the set expression.
bool closed_form_predicate(int orbit, const RankOne<Rational>& p);

}  // namespace declocus

#endif
