#ifndef DECLOCUS_WSTATE_HPP
#define DECLOCUS_WSTATE_HPP

#include <vector>

#include "tensor.hpp"

namespace declocus {

// The rank-one point [q] at which a tangential tensor touches the Segre variety.
struct TangencyPoint {
    std::vector<Vec<Rational>> factors;  // unit-normalized

    RankOne<Rational> rank_one() const { return {factors}; }
};

struct DecompositionTerm {
    Rational coefficient;
    RankOne<Rational> rank_one;  // unit-normalized factors
};

struct Decomposition {
    std::vector<DecompositionTerm> terms;

    Tensor<Rational> sum(const Shape& shape) const;
};

// Scales v so that its first nonzero coordinate is 1; `scale` receives that coordinate.
Vec<Rational> unit_normalize(const Vec<Rational>& v, Rational* scale = nullptr);
bool proportional(const Vec<Rational>& x, const Vec<Rational>& y);
// True when every factor of p is parallel to the matching factor of q.
bool same_point(const RankOne<Rational>& p, const RankOne<Rational>& q);

TangencyPoint find_tangency(const Tensor<Rational>& t);

// A decomposition of t into order(t) rank-one terms, one of them a multiple of p.
Decomposition decompose_tangential(const Tensor<Rational>& t, const RankOne<Rational>& p);

bool verify_decomposition(const Tensor<Rational>& t, const Decomposition& d);

}  // namespace declocus

#endif
