#ifndef DECLOCUS_LOCUS_HPP
#define DECLOCUS_LOCUS_HPP

#include <optional>
#include <string>

#include "parametric.hpp"

namespace declocus {

// A nonzero λ with rank(T - λP) = rank(T) - 1: a rational value, or any root
// of an irreducible polynomial.
struct LambdaWitness {
    std::optional<Rational> value;
    UniPoly minimal_poly;

    static LambdaWitness rational(const Rational& x) { return {x, UniPoly::linear_root(x)}; }
    static LambdaWitness algebraic(const UniPoly& q) {
        if (q.degree() == 1) return rational(-q.coeff(0) / q.coeff(1));
        return {std::nullopt, q.monic()};
    }
};

enum class LocusStatus { InDecomposition, Forbidden };

struct LocusVerdict {
    LocusStatus status = LocusStatus::Forbidden;
    std::optional<LambdaWitness> witness;  // present iff InDecomposition

    static LocusVerdict forbidden() { return {}; }
    static LocusVerdict in(const LambdaWitness& w) { return {LocusStatus::InDecomposition, w}; }
    bool in_decomposition() const { return status == LocusStatus::InDecomposition; }
    std::string str() const { return in_decomposition() ? "in_decomposition" : "forbidden"; }
};

enum class Strategy { Generic, Specialized };

// P = u ⊗ v against the matrix A, through the pseudoinverse.
LocusVerdict locus_matrix(const Mat<Rational>& a, const Vec<Rational>& u, const Vec<Rational>& v);

// T tangential of order >= 3: Forbidden exactly at the tangency point.
LocusVerdict locus_tangential(const Tensor<Rational>& t, const RankOne<Rational>& p);

LocusVerdict locus_membership(const Tensor<Rational>& t, const RankOne<Rational>& p, Strategy strategy);

// Checks rank(T - λ0 P) = rank(T) - 1 for the witness, over Q or over Q(λ0).
bool verify_witness(const Tensor<Rational>& t, const RankOne<Rational>& p, const LambdaWitness& w);

}  // namespace declocus

#endif
