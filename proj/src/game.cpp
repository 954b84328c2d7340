#include "declocus/game.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "declocus/classify.hpp"
#include "declocus/locus.hpp"
#include "declocus/wstate.hpp"

namespace declocus {

namespace {

constexpr int kSearchBudget = 4000;
constexpr int kRandomPerNode = 150;

std::vector<Index> nonzero_entries(const Tensor<Rational>& t) {
    std::vector<Index> out;
    for (size_t off = 0; off < t.size(); ++off)
        if (!t.entries()[off].is_zero()) out.push_back(t.index_of(off));
    return out;
}

RankOne<Rational> unit_term(const Shape& sh, const Index& idx) {
    RankOne<Rational> p;
    for (size_t a = 0; a < sh.size(); ++a) p.factors.push_back(unit(sh[a], idx[a]));
    return p;
}

// e_i on `axis` times the pivot rank-one of the slice through (r, c).
std::vector<RankOne<Rational>> slice_terms(const Tensor<Rational>& t) {
    std::vector<RankOne<Rational>> out;
    if (t.order() != 3) return out;
    const Shape& sh = t.shape();
    for (size_t axis = 0; axis < 3; ++axis)
        for (size_t i = 0; i < sh[axis]; ++i) {
            Mat<Rational> s = slice_matrix(t, axis, i);
            for (size_t r = 0; r < s.rows(); ++r)
                for (size_t c = 0; c < s.cols(); ++c) {
                    if (s(r, c).is_zero()) continue;
                    Vec<Rational> col(s.rows()), row(s.cols());
                    for (size_t k = 0; k < s.rows(); ++k) col[k] = s(k, c);
                    for (size_t k = 0; k < s.cols(); ++k) row[k] = s(r, k);
                    RankOne<Rational> p;
                    std::vector<Vec<Rational>> rest{col, row};
                    for (size_t a = 0, k = 0; a < 3; ++a) p.factors.push_back(a == axis ? unit(sh[a], i) : rest[k++]);
                    out.push_back(p);
                }
        }
    return out;
}

RankOne<Rational> random_rank_one(const Shape& sh, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    RankOne<Rational> p;
    for (size_t n : sh) {
        Vec<Rational> v(n);
        do {
            for (auto& x : v) x = Rational(d(rng));
        } while (vec_is_zero(v));
        p.factors.push_back(v);
    }
    return p;
}

std::optional<GameState> try_move(const GameState& s, const RankOne<Rational>& p, const Rational& lam) {
    try {
        return game_step(s, p, lam);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IllegalMove) return std::nullopt;
        throw;
    }
}

std::optional<GameState> try_locus(const GameState& s, const RankOne<Rational>& p) {
    LocusVerdict v = locus_membership(s.current, p, Strategy::Specialized);
    if (!v.in_decomposition() || !v.witness->value) return std::nullopt;
    return try_move(s, p, *v.witness->value);
}

// Plays every term of a tangential decomposition through some candidate.
std::optional<GameState> tangential_moves(const GameState& s, const std::vector<RankOne<Rational>>& candidates) {
    for (auto& p : candidates) {
        Decomposition d;
        try {
            d = decompose_tangential(s.current, p);
        } catch (const Error&) {
            continue;
        }
        GameState cur = s;
        bool ok = true;
        for (size_t i = 0; ok && i < d.terms.size(); ++i) {
            auto next = try_move(cur, d.terms[i].rank_one, d.terms[i].coefficient);
            if (next) cur = *next;
            else ok = false;
        }
        if (ok) return cur;
    }
    return std::nullopt;
}

// Canonical-core rank-one pulled back to the input coordinates.
RankOne<Rational> from_canonical(const ClassifyReport<Rational>& rep, const RankOne<Rational>& q) {
    const auto& bases = rep.reduction.bases;
    RankOne<Rational> p;
    for (size_t a = 0; a < bases.size(); ++a) {
        Vec<Rational> f{Rational(1)};
        for (size_t i = 0; i < rep.permutation.size(); ++i)
            if (rep.permutation[i] == a) f = q.factors[i];
        p.factors.push_back(bases[a] * f);
    }
    return p;
}

// For a square pencil, the term belonging to each simple rational root of the
// determinant: the kernels of the singular member pick out its b and c factors.
std::vector<RankOne<Rational>> pencil_terms(const ClassifyReport<Rational>& rep) {
    std::vector<RankOne<Rational>> out;
    const Shape& sh = rep.canonical.shape();
    if (rep.matrix_case || sh.size() != 3 || sh[1] != sh[2]) return out;
    Pencil<Rational> pen = pencil_of(rep.canonical);
    BinaryForm<Rational> d = det_form(pen);
    if (d.is_zero()) return out;
    for (auto& [f, m] : bform_root_profile(d)) {
        if (m != 1 || f.degree() != 1) continue;
        Rational u0 = f.coeff(1), v0 = -f.coeff(0);
        Mat<Rational> mem = pen.member(u0, v0);
        auto right = mat_nullspace(mem), left = mat_nullspace(mem.transpose());
        if (right.size() != 1 || left.size() != 1) continue;
        Mat<Rational> n = v0.is_zero() ? pen.B : pen.A;
        RankOne<Rational> q{{Vec<Rational>{v0, -u0}, n * right[0], n.transpose() * left[0]}};
        out.push_back(from_canonical(rep, q));
    }
    return out;
}

// Small rational points of P^1.
std::vector<Vec<Rational>> line_points() {
    std::vector<Vec<Rational>> out{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int sign : {1, -1}) out.push_back({Rational(d), Rational(sign * n)});
    return out;
}

struct Contraction {
    Vec<Rational> gamma;
    Vec<Rational> a, other;  // T(γ) = a ⊗ other
};

// Rank-one contractions of a (2, b, c) core along `axis` (1 or 2): for each
// rational a the γ with T(γ) = a ⊗ w solve a linear system in (γ, w). Only
// contractions independent of the earlier ones are kept.
std::vector<Contraction> rank_one_contractions(const Tensor<Rational>& k, size_t axis) {
    const Shape& sh = k.shape();
    size_t nw = sh[3 - axis], ng = sh[axis];
    std::vector<Contraction> out;
    for (auto& a : line_points()) {
        Mat<Rational> sys(2 * nw, ng + nw);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < nw; ++j) {
                for (size_t g = 0; g < ng; ++g) sys(i * nw + j, g) = axis == 2 ? k[{i, j, g}] : k[{i, g, j}];
                sys(i * nw + j, ng + j) = -a[i];
            }
        for (auto& z : mat_nullspace(sys)) {
            Vec<Rational> g(z.begin(), z.begin() + static_cast<long>(ng)), w(z.begin() + static_cast<long>(ng), z.end());
            if (vec_is_zero(w)) continue;
            Mat<Rational> rows(out.size() + 1, ng);
            for (size_t r = 0; r < out.size(); ++r)
                for (size_t c = 0; c < ng; ++c) rows(r, c) = out[r].gamma[c];
            for (size_t c = 0; c < ng; ++c) rows(out.size(), c) = g[c];
            if (mat_rank(rows) != out.size() + 1) continue;
            out.push_back({g, a, w});
            if (out.size() == ng) return out;
        }
    }
    return out;
}

// When rank equals the last canonical dimension c and the rank-one contractions
// span, T = Σ_j T(γ_j) ⊗ c_j with c_j the dual basis of the γ_j.
std::optional<std::vector<RankOne<Rational>>> contraction_terms(const ClassifyReport<Rational>& rep) {
    const Tensor<Rational>& k = rep.canonical;
    const Shape& sh = k.shape();
    if (rep.matrix_case || sh.size() != 3 || sh[2] != rep.rank) return std::nullopt;
    size_t nc = sh[2];
    std::vector<Contraction> cs = rank_one_contractions(k, 2);
    if (cs.size() != nc) return std::nullopt;
    Mat<Rational> gm(nc, nc);
    for (size_t r = 0; r < nc; ++r)
        for (size_t c = 0; c < nc; ++c) gm(r, c) = cs[r].gamma[c];
    Mat<Rational> dual = mat_inverse(gm);
    std::vector<RankOne<Rational>> out;
    for (size_t j = 0; j < nc; ++j) {
        Vec<Rational> cj(nc);
        for (size_t r = 0; r < nc; ++r) cj[r] = dual(r, j);
        out.push_back(from_canonical(rep, {{cs[j].a, cs[j].other, cj}}));
    }
    return out;
}

// T(γ) ⊗ x for rank-one contractions T(γ) and unit x on the contracted axis;
// subtracting one at the right λ lowers that flattening rank.
std::vector<RankOne<Rational>> contraction_moves(const ClassifyReport<Rational>& rep) {
    std::vector<RankOne<Rational>> out;
    const Tensor<Rational>& k = rep.canonical;
    if (rep.matrix_case || k.order() != 3) return out;
    for (size_t axis : {2, 1})
        for (auto& c : rank_one_contractions(k, axis))
            for (size_t i = 0; i < k.shape()[axis]; ++i) {
                Vec<Rational> x = unit(k.shape()[axis], i);
                if (dot(c.gamma, x).is_zero()) continue;
                RankOne<Rational> q{{c.a, axis == 2 ? c.other : x, axis == 2 ? x : c.other}};
                out.push_back(from_canonical(rep, q));
            }
    return out;
}

// Depth-first play with backtracking: a move can leave a tensor whose only
// minimal decompositions are irrational.
struct Search {
    std::mt19937_64 rng;
    int budget = kSearchBudget;
    std::string stuck = "the initial tensor";
    std::set<std::vector<Rational>> dead;

    std::optional<GameState> play(const GameState& s) {
        if (s.over()) return s;
        if (dead.count(s.current.entries())) return std::nullopt;
        ClassifyReport<Rational> rep = classify(s.current);
        std::vector<Index> entries = nonzero_entries(s.current);
        const Shape& sh = s.current.shape();

        if (rep.matrix_case) {
            size_t axis = rep.permutation.empty() ? 0 : rep.permutation[0];
            GameMove m = pivot_move(s.current, axis, entries.front());
            if (auto next = try_move(s, m.rank_one, m.lambda))
                if (auto done = play(*next)) return done;
        }
        if (rep.orbit.kind == OrbitKind::Orbit && rep.orbit.value == 5) {
            std::vector<RankOne<Rational>> cands;
            for (auto& idx : entries) cands.push_back(unit_term(sh, idx));
            for (int i = 0; i < 8; ++i) cands.push_back(random_rank_one(sh, rng));
            if (auto done = tangential_moves(s, cands)) return done;
        }
        if (auto terms = contraction_terms(rep)) {
            GameState cur = s;
            for (size_t i = 0; i < terms->size() && !cur.over(); ++i) {
                auto next = try_move(cur, (*terms)[i], Rational(1));
                if (!next) break;
                cur = *next;
            }
            if (cur.over()) return cur;
        }
        std::vector<RankOne<Rational>> cands = pencil_terms(rep);
        for (auto& p : contraction_moves(rep)) cands.push_back(p);
        for (auto& idx : entries) cands.push_back(unit_term(sh, idx));
        for (auto& p : slice_terms(s.current)) cands.push_back(p);
        for (auto& p : cands)
            if (auto done = follow(s, p)) return done;
        for (int i = 0; i < kRandomPerNode; ++i)
            if (auto done = follow(s, random_rank_one(sh, rng))) return done;
        stuck = rep.orbit.str();
        dead.insert(s.current.entries());
        return std::nullopt;
    }

    std::optional<GameState> follow(const GameState& s, const RankOne<Rational>& p) {
        if (budget <= 0) return std::nullopt;
        --budget;
        auto next = try_locus(s, p);
        if (!next) return std::nullopt;
        return play(*next);
    }
};

}  // namespace

GameMove pivot_move(const Tensor<Rational>& t, size_t axis, const Index& at) {
    check_axis(t, axis);
    const Rational& t0 = t[at];
    if (t0.is_zero()) throw Error(ErrorCode::DivisionByZero, "pivot entry is zero");
    GameMove m;
    for (size_t a = 0; a < t.order(); ++a) {
        Vec<Rational> v(t.shape()[a]);
        Index idx = at;
        for (size_t k = 0; k < v.size(); ++k) {
            idx[a] = k;
            v[k] = t[idx];
        }
        m.rank_one.factors.push_back(v);
    }
    Rational lam(1);
    for (size_t a = 1; a < t.order(); ++a) lam /= t0;
    m.lambda = lam;
    return m;
}

GameState game_start(const Tensor<Rational>& t) {
    GameState s;
    s.current = t;
    s.initial_rank = s.rank = classify_summary(t).rank;
    return s;
}

GameState game_step(const GameState& s, const RankOne<Rational>& p, const Rational& lam) {
    if (lam.is_zero()) throw Error(ErrorCode::IllegalMove, "lambda must be nonzero");
    if (s.over()) throw Error(ErrorCode::IllegalMove, "the game is over");
    Tensor<Rational> next = subtract_scaled(s.current, lam, p);
    size_t r = classify_summary(next).rank;
    if (r + 1 != s.rank)
        throw Error(ErrorCode::IllegalMove, "rank goes from " + std::to_string(s.rank) + " to " + std::to_string(r));
    GameState out = s;
    out.current = std::move(next);
    out.moves.push_back({p, lam});
    out.rank = r;
    return out;
}

GameState game_play_greedy(const Tensor<Rational>& t, std::uint64_t seed) {
    Search search{std::mt19937_64(seed)};
    GameState s = game_start(t);
    if (auto done = search.play(s)) return *done;
    throw Error(ErrorCode::NoRationalWitnessFound, "no rational move found at " + search.stuck + " within the search budget");
}

}  // namespace declocus
