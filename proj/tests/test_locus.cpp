#include <gtest/gtest.h>

#include "declocus/closed_form.hpp"
#include "declocus/locus.hpp"
#include "declocus/wstate.hpp"
#include "locus_components.hpp"
#include "test_util.hpp"

using namespace declocus;
using testutil::Rng;

namespace {

Mat<Rational> diag110() {
    Mat<Rational> a(3, 3);
    a(0, 0) = Rational(1);
    a(1, 1) = Rational(1);
    return a;
}

Vec<Rational> v(std::initializer_list<int> xs) {
    Vec<Rational> out;
    for (int x : xs) out.push_back(Rational(x));
    return out;
}

Mat<Rational> outer(const Vec<Rational>& u, const Vec<Rational>& w) {
    Mat<Rational> m(u.size(), w.size());
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j) m(i, j) = u[i] * w[j];
    return m;
}

Tensor<Rational> tangential() { return testutil::from_ones({2, 2, 2}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

RankOne<Rational> point(std::vector<Vec<Rational>> fs) { return {std::move(fs)}; }

size_t rank_of(const Tensor<Rational>& t) { return t.is_zero() ? 0 : classify_summary(t).rank; }

bool verdict(const Tensor<Rational>& t, const RankOne<Rational>& p, Strategy s) {
    return locus_membership(t, p, s).in_decomposition();
}

// Distinct points of P^1 for every factor of a (2,...,2) rank-one point.
RankOne<Rational> distinct_point(Rng& rng, size_t k, const RankOne<Rational>& q) {
    for (;;) {
        RankOne<Rational> p = testutil::rank_one(rng, Shape(k, 2));
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            ok = !proportional(p.factors[i], q.factors[i]);
            for (size_t j = 0; j < i && ok; ++j) ok = !proportional(p.factors[i], p.factors[j]);
        }
        if (ok) return p;
    }
}

}  // namespace

TEST(LocusMatrix, Examples) {
    auto in = locus_matrix(diag110(), v({1, 0, 0}), v({1, 0, 0}));
    ASSERT_TRUE(in.in_decomposition());
    EXPECT_EQ(*in.witness->value, Rational(1));
    EXPECT_FALSE(locus_matrix(diag110(), v({1, 0, 0}), v({0, 1, 0})).in_decomposition());
    Vec<Rational> u = v({1, 1, 0}), w = v({1, -1, 0});
    EXPECT_FALSE(locus_matrix(diag110(), u, w).in_decomposition());
    Rng rng(61);
    for (int i = 0; i < 10; ++i) {
        Rational lam = testutil::small(rng, 9) + Rational(1, 7);
        EXPECT_EQ(mat_rank(diag110() - lam * outer(u, w)), 2u);
    }
    EXPECT_FALSE(locus_matrix(diag110(), v({0, 0, 1}), v({0, 0, 1})).in_decomposition());
    EXPECT_THROW(locus_matrix(diag110(), v({1, 0}), v({1, 0, 0})), Error);
}

TEST(LocusMatrix, PropertyWitnessCheck) {
    Rng rng(62);
    for (int i = 0; i < 200; ++i) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        Mat<Rational> a = testutil::matrix_of_rank(rng, r, c, 1 + rng() % std::min(r, c));
        if (mat_rank(a) == 0) continue;
        Vec<Rational> u = testutil::vec(rng, r, 30), w = testutil::vec(rng, c, 30);
        if (i % 2) {
            u = a * testutil::vec(rng, c);
            w = a.transpose() * testutil::vec(rng, r);
            if (vec_is_zero(u) || vec_is_zero(w)) continue;
        }
        auto got = locus_matrix(a, u, w);
        size_t rk = mat_rank(a);
        Rational s = dot(w, pseudoinverse(a) * u);
        if (got.in_decomposition()) {
            EXPECT_EQ(*got.witness->value, s.inv());
            EXPECT_EQ(mat_rank(a - *got.witness->value * outer(u, w)), rk - 1);
        } else {
            for (int k = 0; k < 10; ++k) {
                Rational lam = testutil::small(rng, 9) + Rational(1, 3 + k);
                EXPECT_GE(mat_rank(a - lam * outer(u, w)), rk);
            }
        }
    }
}

TEST(LocusTangential, Examples) {
    Tensor<Rational> t = tangential();
    RankOne<Rational> e1 = point({v({1, 0}), v({1, 0}), v({1, 0})});
    EXPECT_FALSE(locus_tangential(t, e1).in_decomposition());
    EXPECT_TRUE(locus_tangential(t, point({v({0, 1}), v({0, 1}), v({0, 1})})).in_decomposition());
    auto w = locus_tangential(t, point({v({1, 0}), v({1, 0}), v({1, 1})}));
    ASSERT_TRUE(w.in_decomposition());
    ASSERT_TRUE(w.witness->value.has_value());
    EXPECT_EQ(*w.witness->value, Rational(1));
    EXPECT_THROW(locus_tangential(normal_form(6), e1), Error);
}

TEST(LocusMembership, Examples) {
    RankOne<Rational> p9 = point({v({1, 0}), v({1, 0}), v({0, 1, 0, 0})});
    EXPECT_FALSE(verdict(normal_form(9), p9, Strategy::Generic));
    EXPECT_FALSE(verdict(normal_form(9), p9, Strategy::Specialized));

    Rng rng(63);
    for (int i = 0; i < 5; ++i) {
        RankOne<Rational> p = testutil::rank_one(rng, {2, 3, 6});
        Rational s = dual_pairing(normal_form(26), p);
        if (s.is_zero()) continue;
        for (Strategy st : {Strategy::Generic, Strategy::Specialized}) {
            auto got = locus_membership(normal_form(26), p, st);
            ASSERT_TRUE(got.in_decomposition());
            EXPECT_EQ(*got.witness->value, s.inv());
        }
    }

    RankOne<Rational> p13 = point({v({0, 1}), v({1, 0, 0}), v({1, 0, 0})});
    EXPECT_TRUE(closed_form_predicate(13, p13));
    EXPECT_FALSE(verdict(normal_form(13), p13, Strategy::Generic));
    EXPECT_FALSE(verdict(normal_form(13), p13, Strategy::Specialized));
}

TEST(ClosedForm, Examples) {
    EXPECT_TRUE(closed_form_predicate(21, point({v({1, 0}), v({0, 0, 1}), v({0, 1, 0, 0})})));
    EXPECT_TRUE(closed_form_predicate(25, point({v({1, 0}), v({1, 1, 0}), v({0, 0, 0, 1, 0})})));
    EXPECT_FALSE(closed_form_predicate(9, point({v({1, 0}), v({1, 0}), v({1, 0, 0, 0})})));
    EXPECT_THROW(closed_form_predicate(6, point({v({1, 0}), v({1, 0}), v({1, 0})})), Error);
}

TEST(Locus, PropertyTripleAgreement) {
    Rng rng(64);
    auto comps = testutil::locus_components();
    for (int n : closed_form_orbits()) {
        Tensor<Rational> t = normal_form(n);
        std::vector<RankOne<Rational>> ps;
        for (int i = 0; i < 40; ++i) ps.push_back(testutil::rank_one(rng, t.shape(), i % 2 ? 40 : 0));
        for (auto& comp : comps[n])
            for (int i = 0; i < 8; ++i)
                if (auto p = testutil::sample_on(rng, t.shape(), comp)) ps.push_back(*p);
        for (auto& p : ps) {
            bool g = verdict(t, p, Strategy::Generic), s = verdict(t, p, Strategy::Specialized);
            EXPECT_EQ(g, s) << "orbit " << n;
            EXPECT_EQ(g, !closed_form_predicate(n, p)) << "orbit " << n;
        }
    }
}

TEST(Locus, PropertyComponentsAreHit) {
    Rng rng(65);
    for (auto& [n, comps] : testutil::locus_components())
        for (auto& comp : comps) EXPECT_TRUE(testutil::sample_on(rng, normal_form_shape(n), comp).has_value()) << n << " " << comp.name;
}

TEST(Locus, PropertyWitnessSoundness) {
    Rng rng(66);
    for (int n = 5; n <= 26; ++n) {
        if (is_matrix_row(n)) continue;
        Tensor<Rational> t = normal_form(n);
        size_t rk = table_row(n).rank;
        for (int i = 0; i < 15; ++i) {
            RankOne<Rational> p = testutil::rank_one(rng, t.shape(), 30);
            auto got = locus_membership(t, p, Strategy::Specialized);
            if (!got.in_decomposition()) continue;
            EXPECT_TRUE(verify_witness(t, p, *got.witness));
            if (got.witness->value) {
                EXPECT_FALSE(got.witness->value->is_zero());
                EXPECT_EQ(rank_of(subtract_scaled(t, *got.witness->value, p)), rk - 1) << "orbit " << n;
            }
        }
    }
}

TEST(Locus, PropertyRankDropsByAtMostOne) {
    Rng rng(67);
    for (int n = 5; n <= 26; ++n) {
        Tensor<Rational> t = normal_form(n);
        size_t rk = rank_of(t);
        for (int i = 0; i < 20; ++i) {
            RankOne<Rational> p = testutil::rank_one(rng, t.shape(), 30);
            Rational lam = testutil::small(rng, 4) + Rational(1, 2 + i % 3);
            EXPECT_GE(rank_of(subtract_scaled(t, lam, p)) + 1, rk) << "orbit " << n;
        }
    }
}

TEST(Locus, PropertyGlEquivariance) {
    Rng rng(68);
    for (int n = 5; n <= 26; ++n) {
        if (is_matrix_row(n)) continue;
        Tensor<Rational> t = normal_form(n);
        for (int i = 0; i < 8; ++i) {
            auto m = testutil::gl_triple(rng, t.shape());
            RankOne<Rational> p = testutil::rank_one(rng, t.shape(), 40);
            EXPECT_EQ(verdict(t, p, Strategy::Specialized), verdict(apply_gl(t, m), apply_gl(p, m), Strategy::Specialized))
                << "orbit " << n;
        }
    }
}

TEST(Locus, PropertyAutarky) {
    Rng rng(69);
    for (int n : {5, 9, 13, 21, 26}) {
        Tensor<Rational> t0 = normal_form(n);
        Shape big = t0.shape();
        big[2] += 1;
        Tensor<Rational> t(big);
        for (size_t off = 0; off < t0.size(); ++off) t[t0.index_of(off)] = t0.entries()[off];
        auto m = testutil::gl_triple(rng, big);
        for (int i = 0; i < 10; ++i) {
            RankOne<Rational> p = testutil::rank_one(rng, big);
            if (p.factors[2].back().is_zero()) p.factors[2].back() = Rational(1);
            EXPECT_FALSE(verdict(t, p, Strategy::Specialized)) << "orbit " << n;
            EXPECT_FALSE(verdict(t, p, Strategy::Generic)) << "orbit " << n;
            EXPECT_FALSE(verdict(apply_gl(t, m), apply_gl(p, m), Strategy::Specialized)) << "orbit " << n;
        }
    }
}

TEST(Locus, PropertyTangencyForbidden) {
    Rng rng(70);
    for (size_t k : {3u, 4u}) {
        for (int i = 0; i < 20; ++i) {
            auto m = testutil::gl_triple(rng, Shape(k, 2));
            Tensor<Rational> t = apply_gl(w_state(k), m);
            RankOne<Rational> q = apply_gl(RankOne<Rational>{std::vector<Vec<Rational>>(k, v({1, 0}))}, m);
            EXPECT_FALSE(locus_tangential(t, q).in_decomposition());
            RankOne<Rational> p = distinct_point(rng, k, q);
            auto got = locus_tangential(t, p);
            ASSERT_TRUE(got.in_decomposition());
            Decomposition d = decompose_tangential(t, p);
            EXPECT_TRUE(verify_decomposition(t, d));
            EXPECT_EQ(d.terms.size(), k);
            if (k == 3) {
                EXPECT_TRUE(verify_witness(t, p, *got.witness));
                EXPECT_FALSE(verdict(t, q, Strategy::Generic));
                EXPECT_TRUE(verdict(t, p, Strategy::Generic));
            }
        }
    }
}
