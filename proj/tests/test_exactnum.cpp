#include <gtest/gtest.h>

#include <random>

#include "declocus/algext.hpp"
#include "declocus/factor.hpp"
#include "declocus/ratfunc.hpp"

using namespace declocus;

namespace {

UniPoly P(std::vector<int> c) {
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return UniPoly(v);
}

UniPoly random_poly(std::mt19937_64& rng, int deg, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(d(rng));
    int lead = 0;
    while (lead == 0) lead = d(rng);
    v.emplace_back(lead);
    return UniPoly(v);
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational a = Rational::parse("-6/4");
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).str(), "1/2");
    EXPECT_EQ(Rational::parse("+7").str(), "7");
}

TEST(Rational, RejectsMalformed) {
    for (const char* s : {"1.5", "", "1/", "/2", "1/0", "a", "1 /2", "--1", "1/-2"}) {
        try {
            Rational::parse(s);
            ADD_FAILURE() << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << s;
        }
    }
}

TEST(Rational, InverseOfZero) {
    EXPECT_THROW(Rational(0).inv(), Error);
}

TEST(UniPolyGcd, Examples) {
    EXPECT_EQ(gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
    EXPECT_EQ(gcd(P({1, 0, 1}), P({-1, 0, 1})), P({1}));
    EXPECT_EQ(gcd(P({0, -1, 0, 1}), P({1, -2, 1})), P({-1, 1}));
    EXPECT_EQ(gcd(P({2, 4}), UniPoly()), UniPoly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
    EXPECT_TRUE(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST(UniPolyGcd, PropertyPlantedFactors) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly c = random_poly(rng, trial % 3, 4);
        UniPoly a = random_poly(rng, 1 + trial % 3, 4) * c;
        UniPoly b = random_poly(rng, 1 + (trial / 3) % 3, 4) * c;
        UniPoly g = gcd(a, b);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        EXPECT_TRUE((g % c.monic()).is_zero());
        EXPECT_TRUE(g.lead().is_one());
        auto x = xgcd(a, b);
        EXPECT_EQ(x.s * a + x.t * b, x.g);
        EXPECT_EQ(x.g, g);
    }
}

TEST(UniPolyDivmod, Reconstructs) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_poly(rng, trial % 6, 9), b = random_poly(rng, trial % 4, 9);
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Factor, Examples) {
    auto f1 = upoly_factor_small(P({0, -1, 0, 1}));
    ASSERT_EQ(f1.size(), 3u);
    EXPECT_EQ(f1[0].first, P({-1, 1}));
    EXPECT_EQ(f1[1].first, P({0, 1}));
    EXPECT_EQ(f1[2].first, P({1, 1}));
    auto f2 = upoly_factor_small(P({-2, 0, 1}));
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].first, P({-2, 0, 1}));
    auto f3 = upoly_factor_small(P({1, 0, 1, 0, 1}));
    ASSERT_EQ(f3.size(), 2u);
    EXPECT_EQ(f3[0].first, P({1, -1, 1}));
    EXPECT_EQ(f3[1].first, P({1, 1, 1}));
    EXPECT_EQ(f3[0].first * f3[1].first, P({1, 0, 1, 0, 1}));
}

TEST(Factor, DegreeTooLarge) {
    try {
        upoly_factor_small(UniPoly::monomial(Rational(1), 7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
    }
}

TEST(Factor, PropertyReconstructsAndIrreducible) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> nf(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
        UniPoly f(Rational(3));
        int deg = 0;
        while (deg < 6) {
            int d = std::min(nf(rng), 6 - deg);
            UniPoly g = random_poly(rng, d, 5);
            if (trial % 4 == 0 && deg + 2 * d <= 6) {
                f = f * g;
                deg += d;
            }
            f = f * g;
            deg += d;
            if (trial % 2) break;
        }
        auto fac = upoly_factor_small(f);
        UniPoly prod(f.lead());
        for (auto& [p, m] : fac) {
            EXPECT_TRUE(p.lead().is_one());
            for (int i = 0; i < m; ++i) prod = prod * p;
            if (p.degree() >= 2) EXPECT_TRUE(rational_roots(p).empty()) << p.str();
        }
        EXPECT_EQ(prod, f);
    }
}

TEST(Factor, KroneckerSplitsPlantedQuadratics) {
    UniPoly a = P({2, 0, 1}), b = P({3, 1, 1}), c = P({-5, 0, 1});
    auto fac = upoly_factor_small(a * b * c);
    EXPECT_EQ(fac.size(), 3u);
    auto fac2 = upoly_factor_small(P({-2, 0, 0, 1}) * P({1, 1, 0, 1}));
    EXPECT_EQ(fac2.size(), 2u);
}

TEST(Factor, RationalRootsLargeCoefficients) {
    Rational r(mpz_class("123456789012345"), mpz_class("7"));
    UniPoly f = UniPoly::linear_root(r) * P({1, 0, 1}) * UniPoly::linear_root(Rational(-3, 2));
    auto roots = rational_roots(f);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0], Rational(-3, 2));
    EXPECT_EQ(roots[1], r);
}

TEST(Factor, CoprimeBase) {
    auto base = coprime_base({P({0, -1, 0, 1}), P({1, -2, 1}), P({-4, 0, 1})});
    UniPoly prod(1);
    for (size_t i = 0; i < base.size(); ++i) {
        prod = prod * base[i];
        for (size_t j = i + 1; j < base.size(); ++j) EXPECT_EQ(gcd(base[i], base[j]).degree(), 0);
    }
    EXPECT_EQ(prod, P({0, 1}) * P({-1, 1}) * P({1, 1}) * P({-2, 1}) * P({2, 1}));
}

TEST(AlgExt, InverseExamples) {
    auto m2 = AlgElem::make_modulus(P({-2, 0, 1}), true);
    AlgElem x = AlgElem::generator(m2);
    EXPECT_EQ(algext_inverse(x).rep(), UniPoly(std::vector<Rational>{Rational(0), Rational(1, 2)}));
    EXPECT_EQ(algext_inverse(AlgElem(1) + x).rep(), P({-1, 1}));
    auto mi = AlgElem::make_modulus(P({1, 0, 1}), true);
    EXPECT_EQ(algext_inverse(AlgElem(UniPoly(Rational(3)), mi)).rep(), UniPoly(Rational(1, 3)));
}

TEST(AlgExt, NotInvertibleAndZeroDivisor) {
    auto m = AlgElem::make_modulus(P({-2, 0, 1}), true);
    try {
        algext_inverse(AlgElem(UniPoly(), m));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
    auto red = AlgElem::make_modulus(P({-1, 0, 1}), false);
    try {
        algext_inverse(AlgElem::generator(red) - AlgElem(1));
        FAIL();
    } catch (const ZeroDivisorError& e) {
        EXPECT_EQ(e.factor(), P({-1, 1}));
    }
}

TEST(AlgExt, PropertyInverse) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> dd(1, 4), cc(-6, 6);
    int moduli = 0;
    while (moduli < 10) {
        UniPoly g = random_poly(rng, dd(rng), 6).monic();
        auto fac = upoly_factor_small(g);
        if (fac.size() != 1 || fac[0].second != 1) continue;
        ++moduli;
        auto m = AlgElem::make_modulus(g, true);
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> rep;
            for (int j = 0; j < g.degree(); ++j) rep.emplace_back(cc(rng));
            AlgElem x(UniPoly(rep), m);
            if (x.is_zero()) continue;
            AlgElem y = algext_inverse(x);
            EXPECT_TRUE((x * y).rep() == UniPoly(1));
        }
    }
}

TEST(RatFunc, ArithmeticAndLogging) {
    RatFunc l = RatFunc::lambda();
    RatFunc a = (l * l - RatFunc(1)) / (l - RatFunc(1));
    EXPECT_EQ(a.num(), P({1, 1}));
    EXPECT_TRUE(a.is_polynomial());
    ZeroTestLog log;
    {
        ZeroTestScope scope(log);
        EXPECT_FALSE((l - RatFunc(2)).is_zero());
        EXPECT_TRUE((l - l).is_zero());
        EXPECT_FALSE(RatFunc(5).is_zero());
    }
    ASSERT_EQ(log.polys.size(), 1u);
    EXPECT_EQ(*log.polys.begin(), P({-2, 1}));
    EXPECT_FALSE((l - RatFunc(3)).is_zero());
    EXPECT_EQ(log.polys.size(), 1u);
}
