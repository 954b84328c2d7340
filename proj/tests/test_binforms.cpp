#include <gtest/gtest.h>

#include "declocus/binform.hpp"
#include "test_util.hpp"

using namespace declocus;
using testutil::Rng;
using BF = BinaryForm<Rational>;

namespace {

BF F(std::vector<int> c) {
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return BF(v);
}

BF power(const BF& f, int k) {
    BF r = BF::constant(Rational(1));
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

Rational schlafli_delta(const Rational& c1, const Rational& c2, const Rational& c3, const Rational& c4) {
    return -c2 * c2 * c3 * c3 + Rational(4) * c1 * c3 * c3 * c3 + Rational(4) * c2 * c2 * c2 * c4 -
           Rational(18) * c1 * c2 * c3 * c4 + Rational(27) * c1 * c1 * c4 * c4;
}

BF random_linear(Rng& rng) {
    for (;;) {
        BF l = BF::linear(testutil::small(rng), testutil::small(rng));
        if (!l.is_zero()) return l;
    }
}

// u^2 + k v^2 with k in {1, 2, 3, 5}: irreducible over Q.
BF random_irreducible_quadratic(Rng& rng) {
    static const int ks[] = {1, 2, 3, 5};
    return F({1, 0, ks[rng() % 4]});
}

// f(αu + βv, γu + δv).
BF substitute(const BF& f, const Rational& al, const Rational& be, const Rational& ga, const Rational& de) {
    int d = f.degree();
    BF x = BF::linear(al, be), y = BF::linear(ga, de);
    BF acc = BF::zero(d);
    for (int i = 0; i <= d; ++i) acc = acc + f.coeff(i) * (power(x, d - i) * power(y, i));
    return acc;
}

}  // namespace

TEST(BformGcd, Examples) {
    EXPECT_EQ(bform_gcd(std::vector<BF>{F({0, 1, 0, 0}), F({1, 0, 0, 0})}), F({1, 0, 0}));
    EXPECT_EQ(bform_gcd(std::vector<BF>{F({1, 1}), F({1, -1})}), F({1}));
    EXPECT_THROW(bform_gcd(std::vector<BF>{BF::zero(2)}), Error);
}

TEST(BformDiscriminant, Examples) {
    EXPECT_TRUE(bform_discriminant(F({1, 0, 0, 0})).is_zero());
    EXPECT_FALSE(bform_discriminant(F({0, 1, -1, 0})).is_zero());
    EXPECT_THROW(bform_discriminant(F({1, 1})), Error);
}

TEST(BformDiscriminant, MatchesSchlafliDelta) {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        Rational c1 = testutil::small(rng, 9), c2 = testutil::small(rng, 9), c3 = testutil::small(rng, 9), c4 = testutil::small(rng, 9);
        BF f(std::vector<Rational>{c4, -c3, c2, -c1});
        EXPECT_EQ(bform_discriminant(f), schlafli_delta(c1, c2, c3, c4));
    }
}

TEST(BformPurePower, Examples) {
    EXPECT_TRUE(bform_is_pure_power(F({1, 0, 0, 0}), 3));
    EXPECT_FALSE(bform_is_pure_power(F({0, 1, 0, 0}), 3));
    auto l = bform_pure_power_root(F({1, 6, 12, 8}), 3);
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(*l, F({1, 2}));
}

TEST(BformRootProfile, Examples) {
    auto p = bform_root_profile(F({0, 1, 0, 0}));
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].factor, F({1, 0}));
    EXPECT_EQ(p[0].multiplicity, 2);
    EXPECT_EQ(p[1].factor, F({0, 1}));
    EXPECT_EQ(p[1].multiplicity, 1);
    auto q = bform_root_profile(F({1, 0, 1}));
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0].factor, F({1, 0, 1}));
    // c3 u^2 - c2 uv + c1 v^2 with c = (1, 2, 1): (u - v)^2 under this sign pattern.
    auto r = bform_root_profile(F({1, -2, 1}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].multiplicity, 2);
    EXPECT_EQ(r[0].factor, F({1, -1}));
    EXPECT_EQ(bform_root_profile(F({1, 2, 1}))[0].factor, F({1, 1}));
}

TEST(Binforms, PropertyGcdDividesInputs) {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        BF common = random_linear(rng);
        BF f = common * random_linear(rng) * random_linear(rng), g = common * random_linear(rng);
        BF h = bform_gcd(std::vector<BF>{f, g});
        for (const BF& x : {f, g}) {
            UniPoly num = x.dehomogenize(), den = h.dehomogenize();
            EXPECT_TRUE((num % den).is_zero());
            EXPECT_GE(x.v_valuation(), h.v_valuation());
        }
        EXPECT_GE(h.degree(), 1);
    }
}

TEST(Binforms, PropertyDiscriminantDetectsRepeatedRoots) {
    Rng rng(33);
    for (int i = 0; i < 500; ++i) {
        int degree = 3 + static_cast<int>(rng() % 2);
        bool plant_repeat = rng() % 2 == 0;
        BF f = BF::constant(Rational(1 + static_cast<int>(rng() % 3)));
        int d = 0;
        if (plant_repeat) {
            BF l = random_linear(rng);
            f = f * l * l;
            d = 2;
        }
        if (degree - d >= 2 && rng() % 3 == 0) {
            f = f * random_irreducible_quadratic(rng);
            d += 2;
        }
        while (d < degree) {
            BF l = random_linear(rng);
            f = f * l;
            ++d;
        }
        bool repeated = false;
        for (auto& rf : bform_root_profile(f)) repeated = repeated || rf.multiplicity >= 2;
        EXPECT_EQ(bform_discriminant(f).is_zero(), repeated) << f.str();
        if (plant_repeat) EXPECT_TRUE(repeated);
    }
}

TEST(Binforms, PropertyPurePowerMatchesProfile) {
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        BF f = rng() % 2 ? power(random_linear(rng), 3) : random_linear(rng) * random_linear(rng) * random_linear(rng);
        auto prof = bform_root_profile(f);
        bool single = prof.size() == 1 && prof[0].factor.degree() == 1 && prof[0].multiplicity == 3;
        EXPECT_EQ(bform_is_pure_power(f, 3), single) << f.str();
    }
}

TEST(Binforms, PropertyCubicDiscriminantUnimodularInvariant) {
    Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        BF f(std::vector<Rational>{testutil::small(rng), testutil::small(rng), testutil::small(rng), testutil::small(rng)});
        // det 1: [[1, b], [0, 1]] · [[1, 0], [c, 1]]
        Rational b = testutil::small(rng), c = testutil::small(rng);
        BF g = substitute(f, Rational(1) + b * c, b, c, Rational(1));
        EXPECT_EQ(bform_discriminant(g), bform_discriminant(f));
    }
}
