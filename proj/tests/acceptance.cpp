#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "declocus/closed_form.hpp"
#include "declocus/game.hpp"
#include "declocus/locus.hpp"
#include "declocus/wstate.hpp"
#include "locus_components.hpp"
#include "test_util.hpp"

using namespace declocus;
using testutil::Rng;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    int failures = 0;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + what;
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

// (table row, border rank, rank) for rows 1..26.
const std::vector<std::pair<size_t, size_t>> kTable = {
    {1, 1}, {2, 2}, {2, 2}, {2, 2}, {2, 3}, {2, 2}, {3, 3}, {3, 3}, {4, 4}, {3, 3}, {3, 3}, {3, 3}, {3, 4},
    {3, 3}, {3, 4}, {3, 4}, {3, 4}, {3, 3}, {4, 4}, {4, 4}, {4, 5}, {4, 4}, {4, 4}, {5, 5}, {5, 5}, {6, 6},
};

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

size_t rank_of(const Tensor<Rational>& t) { return t.is_zero() ? 0 : classify_summary(t).rank; }

Tensor<Rational> tangential() { return testutil::from_ones({2, 2, 2}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

std::string str(const RankOne<Rational>& p) {
    std::string s;
    for (auto& f : p.factors) {
        s += "(";
        for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].str();
        s += ")";
    }
    return s;
}

Outcome table_reproduction() {
    Outcome o;
    for (int n = 1; n <= 26; ++n) {
        auto r = classify(normal_form(n));
        auto [brk, rk] = kTable[static_cast<size_t>(n - 1)];
        o.check(r.table_row == n && r.border_rank == brk && r.rank == rk, "row " + std::to_string(n));
    }
    o.detail = o.ok ? "26/26 rows" : o.detail;
    return o;
}

Outcome cayley_identity() {
    Outcome o;
    Rng rng(1001);
    for (int i = 0; i < 200; ++i) {
        RankOne<Rational> p = testutil::rank_one(rng, {2, 2, 2});
        auto a = [&](int k) { return p.factors[0][static_cast<size_t>(k - 1)]; };
        auto b = [&](int k) { return p.factors[1][static_cast<size_t>(k - 1)]; };
        auto c = [&](int k) { return p.factors[2][static_cast<size_t>(k - 1)]; };
        Rational q = a(2) * a(2) * b(2) * b(2) * c(1) * c(1) + Rational(2) * a(2) * a(2) * b(1) * b(2) * c(1) * c(2) +
                     Rational(2) * a(1) * a(2) * b(2) * b(2) * c(1) * c(2) + a(2) * a(2) * b(1) * b(1) * c(2) * c(2) +
                     Rational(2) * a(1) * a(2) * b(1) * b(2) * c(2) * c(2) + a(1) * a(1) * b(2) * b(2) * c(2) * c(2);
        std::vector<Rational> want = {Rational(0), Rational(-4) * a(2) * b(2) * c(2), q, Rational(0), Rational(0)};
        Tensor<UniPoly> f = tangential().map([](const Rational& x) { return UniPoly(x); }) -
                            p.expand().map([](const Rational& x) { return UniPoly(x) * UniPoly::x(); });
        UniPoly h = hyperdet222(f);
        bool same = h.degree() <= 4;
        for (int k = 0; k <= 4; ++k) same = same && h.coeff(k) == want[static_cast<size_t>(k)];
        o.check(same, "P = " + str(p));
    }
    o.detail = o.ok ? "200/200 exact" : o.detail;
    return o;
}

Outcome schlafli_anchor() {
    Outcome o;
    Rng rng(1002);
    for (int i = 0; i < 50; ++i) {
        Rational c1 = testutil::small(rng, 9), c2 = testutil::small(rng, 9), c3 = testutil::small(rng, 9), c4 = testutil::small(rng, 9);
        Rational delta = -c2 * c2 * c3 * c3 + Rational(4) * c1 * c3 * c3 * c3 + Rational(4) * c2 * c2 * c2 * c4 -
                         Rational(18) * c1 * c2 * c3 * c4 + Rational(27) * c1 * c1 * c4 * c4;
        BinaryForm<Rational> f(std::vector<Rational>{c4, -c3, c2, -c1});
        o.check(bform_discriminant(f) == delta, "c = (" + c1.str() + "," + c2.str() + "," + c3.str() + "," + c4.str() + ")");
    }
    o.detail = o.ok ? "50/50 exact" : o.detail;
    return o;
}

Outcome tangential_theorem() {
    Outcome o;
    Rng rng(1003);
    int forbidden = 0, decomposed = 0;
    for (size_t k : {3u, 4u, 5u}) {
        for (int i = 0; i < 50; ++i) {
            auto m = testutil::gl_triple(rng, Shape(k, 2));
            Tensor<Rational> t = apply_gl(w_state(k), m);
            RankOne<Rational> q = apply_gl(RankOne<Rational>{std::vector<Vec<Rational>>(k, v({1, 0}))}, m);
            bool f = !locus_tangential(t, q).in_decomposition() && same_point(find_tangency(t).rank_one(), q);
            o.check(f, "k=" + std::to_string(k) + " tangency point not forbidden");
            forbidden += f;
            for (int j = 0; j < 2; ++j) {
                RankOne<Rational> p;
                for (bool distinct = false; !distinct;) {
                    p = testutil::rank_one(rng, Shape(k, 2));
                    distinct = true;
                    for (size_t a = 0; a < k; ++a) {
                        distinct = distinct && !proportional(p.factors[a], q.factors[a]);
                        for (size_t b = 0; b < a; ++b) distinct = distinct && !proportional(p.factors[a], p.factors[b]);
                    }
                }
                Decomposition d = decompose_tangential(t, p);
                bool contains = false;
                for (auto& term : d.terms) contains = contains || same_point(term.rank_one, p);
                bool good = locus_tangential(t, p).in_decomposition() && d.terms.size() == k && contains &&
                            d.sum(t.shape()) == t;
                o.check(good, "k=" + std::to_string(k) + " P = " + str(p));
                decomposed += good;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(forbidden) + " tangency points forbidden, " + std::to_string(decomposed) + " decompositions verified";
    return o;
}

Outcome example_fixture() {
    Outcome o;
    Decomposition d;
    RankOne<Rational> p{{v({1, 1}), v({1, 1}), v({0, 1})}};
    d.terms.push_back({Rational(-1, 3), p});
    d.terms.push_back({Rational(1, 4), {{v({2, 1}), v({2, 1}), v({1, 1})}}});
    d.terms.push_back({Rational(1, 12), {{v({-2, 1}), v({-2, 1}), v({-3, 1})}}});
    o.check(d.sum({2, 2, 2}) == tangential(), "fixture does not sum to the tensor");
    Decomposition got = decompose_tangential(tangential(), p);
    bool contains = false;
    for (auto& term : got.terms) contains = contains || same_point(term.rank_one, p);
    o.check(got.terms.size() == 3 && verify_decomposition(tangential(), got) && contains, "constructed decomposition invalid");
    if (o.ok) o.detail = "fixture sums exactly; constructed 3-term decomposition contains P";
    return o;
}

Outcome matrix_criterion() {
    Outcome o;
    Rng rng(1006);
    int in = 0, out = 0;
    for (int i = 0; in + out < 200; ++i) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        Mat<Rational> a = testutil::matrix_of_rank(rng, r, c, 1 + rng() % std::min(r, c));
        if (mat_rank(a) == 0) a(0, 0) = Rational(1);
        size_t rk = mat_rank(a);
        Vec<Rational> u = testutil::vec(rng, r, 30), w = testutil::vec(rng, c, 30);
        if (i % 2) {
            u = a * testutil::vec(rng, c);
            w = a.transpose() * testutil::vec(rng, r);
            if (vec_is_zero(u) || vec_is_zero(w)) continue;
        }
        Rational s = dot(w, pseudoinverse(a) * u);
        auto got = locus_matrix(a, u, w);
        bool drops = !s.is_zero() && mat_rank(a - s.inv() * outer(u, w)) + 1 == rk;
        if (drops) {
            ++in;
            o.check(got.in_decomposition() && *got.witness->value == s.inv(), "matrix " + std::to_string(i));
        } else {
            ++out;
            bool stays = !got.in_decomposition();
            for (int k = 0; k < 10; ++k) stays = stays && mat_rank(a - (testutil::small(rng, 9) + Rational(1, 2 + k)) * outer(u, w)) >= rk;
            o.check(stays, "matrix " + std::to_string(i));
        }
    }
    if (o.ok) o.detail = std::to_string(in) + " in decomposition, " + std::to_string(out) + " forbidden";
    return o;
}

Outcome triple_agreement() {
    Outcome o;
    Rng rng(1007);
    auto comps = testutil::locus_components();
    long total = 0, in = 0;
    for (int n : closed_form_orbits()) {
        Tensor<Rational> t = normal_form(n);
        std::vector<std::pair<std::string, RankOne<Rational>>> ps;
        for (int i = 0; i < 500; ++i) ps.push_back({"dense", testutil::rank_one(rng, t.shape(), i % 3 == 0 ? 0 : 20 * (i % 3))});
        for (auto& comp : comps[n]) {
            int got = 0;
            for (int i = 0; i < 100; ++i)
                if (auto p = testutil::sample_on(rng, t.shape(), comp)) {
                    ps.push_back({comp.name, *p});
                    ++got;
                }
            o.check(got == 100, "orbit " + std::to_string(n) + " component " + comp.name + " undersampled");
        }
        for (auto& [name, p] : ps) {
            bool g = locus_membership(t, p, Strategy::Generic).in_decomposition();
            auto sv = locus_membership(t, p, Strategy::Specialized);
            bool c = !closed_form_predicate(n, p);
            o.check(g == sv.in_decomposition() && g == c,
                    "orbit " + std::to_string(n) + " " + name + " P = " + str(p));
            if (sv.in_decomposition()) o.check(verify_witness(t, p, *sv.witness), "orbit " + std::to_string(n) + " witness");
            ++total;
            in += g;
        }
    }
    if (o.ok) o.detail = std::to_string(total) + " samples agree (" + std::to_string(in) + " in decomposition)";
    return o;
}

Outcome gl_equivariance() {
    Outcome o;
    Rng rng(1008);
    long total = 0;
    for (int n = 1; n <= 26; ++n) {
        Tensor<Rational> t = normal_form(n);
        for (int i = 0; i < 50; ++i) {
            auto m = testutil::gl_triple(rng, t.shape());
            RankOne<Rational> p = testutil::rank_one(rng, t.shape(), i % 2 ? 40 : 0);
            bool before = locus_membership(t, p, Strategy::Specialized).in_decomposition();
            bool after = locus_membership(apply_gl(t, m), apply_gl(p, m), Strategy::Specialized).in_decomposition();
            o.check(before == after, "orbit " + std::to_string(n) + " P = " + str(p));
            ++total;
        }
    }
    if (o.ok) o.detail = std::to_string(total) + " verdicts invariant";
    return o;
}

Outcome penrose() {
    Outcome o;
    Rng rng(1009);
    for (int i = 0; i < 100; ++i) {
        size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Mat<Rational> a = testutil::matrix_of_rank(rng, r, c, rng() % (std::min(r, c) + 1));
        Mat<Rational> x = pseudoinverse(a);
        o.check(a * x * a == a && x * a * x == x && (a * x).transpose() == a * x && (x * a).transpose() == x * a,
                "matrix " + std::to_string(i));
    }
    if (o.ok) o.detail = "100/100 matrices satisfy all four identities";
    return o;
}

Outcome tensor_game() {
    Outcome o;
    Rng rng(1010);
    std::vector<std::pair<std::string, Tensor<Rational>>> inputs;
    for (int n = 1; n <= 26; ++n) inputs.push_back({"T" + std::to_string(n), normal_form(n)});
    for (int i = 0; i < 50; ++i) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        Mat<Rational> m = testutil::matrix_of_rank(rng, r, c, 1 + rng() % std::min(r, c));
        if (mat_rank(m) == 0) m(0, 0) = Rational(1);
        Tensor<Rational> t(Shape{r, c});
        for (size_t a = 0; a < r; ++a)
            for (size_t b = 0; b < c; ++b) t[{a, b}] = m(a, b);
        inputs.push_back({"matrix " + std::to_string(i), t});
    }
    size_t moves = 0;
    for (auto& [name, t] : inputs) {
        try {
            GameState end = game_play_greedy(t);
            size_t rk = rank_of(t);
            bool good = end.over() && end.moves.size() == rk;
            Tensor<Rational> cur = t;
            for (auto& m : end.moves) {
                Tensor<Rational> next = subtract_scaled(cur, m.lambda, m.rank_one);
                good = good && rank_of(next) + 1 == rank_of(cur);
                cur = next;
            }
            o.check(good && cur.is_zero(), name);
            moves += end.moves.size();
        } catch (const Error& e) {
            o.check(false, name + ": " + e.what());
        }
    }
    if (o.ok) o.detail = std::to_string(inputs.size()) + " games, " + std::to_string(moves) + " moves validated";
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "Table-1 reproduction", 1, table_reproduction},
        {2, "Cayley identity", 5, cayley_identity},
        {3, "Schlafli anchor", 1, schlafli_anchor},
        {4, "Tangential theorem", 60, tangential_theorem},
        {5, "Example fixture", 1, example_fixture},
        {6, "Matrix criterion", 10, matrix_criterion},
        {7, "Triple-oracle agreement", 600, triple_agreement},
        {8, "GL-equivariance", 300, gl_equivariance},
        {9, "Pseudoinverse", 2, penrose},
        {10, "TensorGame", 120, tensor_game},
    };
    int failed = 0;
    for (auto& c : cs) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_s) {
            o.ok = false;
            o.detail += "; over the time limit";
        }
        failed += !o.ok;
        std::printf("%s criterion %2d  %-24s %8.2fs / %gs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_s,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(cs.size()) - failed, cs.size());
    return failed == 0 ? 0 : 1;
}
