#ifndef DECLOCUS_FACTOR_HPP
#define DECLOCUS_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace declocus {

struct Factor {
    UniPoly poly;      // monic
    int multiplicity;  // >= 1
    bool irreducible;  // false only for large cofactors that were not fully split
};

// Primitive integer coefficient vector of a nonzero rational polynomial.
std::vector<mpz_class> primitive_integer_coeffs(const UniPoly& f);

// All distinct rational roots of f (f nonzero), in increasing order.
std::vector<Rational> rational_roots(const UniPoly& f);

// Monic irreducible factors over Q with multiplicities; degree(f) <= 6.
std::vector<std::pair<UniPoly, int>> upoly_factor_small(const UniPoly& f);

// Like upoly_factor_small but accepts any degree: rational roots are always split
// off, the remaining squarefree cofactors of degree > 6 are kept whole.
std::vector<Factor> factor_best_effort(const UniPoly& f);

// Pairwise coprime, squarefree, monic polynomials with the same root set as the
// union of the inputs' roots (zero and constant inputs are ignored).
std::vector<UniPoly> coprime_base(const std::vector<UniPoly>& polys);

// Canonical ordering: by degree, then coefficients from the top.
bool poly_less(const UniPoly& a, const UniPoly& b);

}  // namespace declocus

#endif
