#ifndef DECLOCUS_PARAMETRIC_HPP
#define DECLOCUS_PARAMETRIC_HPP

#include <vector>

#include "classify.hpp"

namespace declocus {

struct ParametricEntry {
    UniPoly factor;       // monic; the orbit holds at every root
    bool irreducible;     // false only for large factors that were not split
    OrbitSummary summary;
};

struct ParametricReport {
    OrbitSummary generic;                    // orbit for all λ outside the considered roots
    std::vector<ParametricEntry> exceptional;  // orbits differing from the generic one, plus λ itself
    std::vector<ParametricEntry> considered;   // every candidate factor examined
    Rational generic_point;                  // nonzero rational avoiding every considered root
};

// Classifies T - λP over Q(λ), then at the roots of every polynomial whose
// nonvanishing the generic computation relied on.
ParametricReport classify_parametric(const ParametricTensor& f);

// Classification of T - αP at the roots α of q (squarefree), splitting q
// whenever arithmetic modulo q reveals a factor.
std::vector<ParametricEntry> classify_at_roots(const ParametricTensor& f, const UniPoly& q, bool irreducible);

// First of 1, -1, 2, -2, ... that is not a root of any of the polynomials.
Rational avoiding_point(const std::vector<UniPoly>& polys);

}  // namespace declocus

#endif
