#include "declocus/selftest.hpp"

#include <algorithm>
#include <random>

#include "declocus/closed_form.hpp"

namespace declocus {

namespace {

constexpr int kLocusSamples = 40;
constexpr int kTangentialSamples = 20;

RankOne<Rational> random_point(const Shape& sh, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3), zero(0, 2);
    RankOne<Rational> p;
    for (size_t n : sh) {
        Vec<Rational> v(n);
        do {
            for (auto& x : v) x = zero(rng) == 0 ? Rational(0) : Rational(d(rng));
        } while (vec_is_zero(v));
        p.factors.push_back(v);
    }
    return p;
}

bool check_table(int n) {
    OrbitSummary s = classify_summary(normal_form(n));
    TableRow r = table_row(n);
    return s.table_row == n && s.rank == r.rank && s.border_rank == r.border_rank;
}

bool check_game(int n, std::uint64_t seed) {
    Tensor<Rational> t = normal_form(n);
    GameState s = game_play_greedy(t, seed);
    GameState replay = game_start(t);
    for (auto& m : s.moves) replay = game_step(replay, m.rank_one, m.lambda);
    return s.moves.size() == table_row(n).rank && replay.over();
}

bool check_locus(int n, std::mt19937_64& rng) {
    Tensor<Rational> t = normal_form(n);
    for (int i = 0; i < kLocusSamples; ++i) {
        RankOne<Rational> p = random_point(t.shape(), rng);
        LocusVerdict g = locus_membership(t, p, Strategy::Generic);
        LocusVerdict s = locus_membership(t, p, Strategy::Specialized);
        if (g.status != s.status || closed_form_predicate(n, p) != !s.in_decomposition()) return false;
        if (s.witness && !verify_witness(t, p, *s.witness)) return false;
    }
    return true;
}

bool distinct_from(const RankOne<Rational>& p, const TangencyPoint& q) {
    for (size_t a = 0; a < p.factors.size(); ++a)
        if (proportional(p.factors[a], q.factors[a])) return false;
    return true;
}

Json check_tangential(std::mt19937_64& rng) {
    Tensor<Rational> t = normal_form(5);
    TangencyPoint q = find_tangency(t);
    bool forbidden = !locus_membership(t, q.rank_one(), Strategy::Specialized).in_decomposition();
    bool decompositions = true;
    for (int done = 0; done < kTangentialSamples;) {
        RankOne<Rational> p = random_point(t.shape(), rng);
        if (!distinct_from(p, q)) continue;
        ++done;
        Decomposition d = decompose_tangential(t, p);
        bool has_p = std::any_of(d.terms.begin(), d.terms.end(), [&](const DecompositionTerm& x) { return same_point(x.rank_one, p); });
        bool in = locus_membership(t, p, Strategy::Specialized).in_decomposition();
        if (d.terms.size() != 3 || !verify_decomposition(t, d) || !has_p || !in) decompositions = false;
    }
    return {{"tangency_forbidden", forbidden}, {"tangential_decompositions", decompositions}};
}

}  // namespace

Json run_selftest(std::optional<int> orbit, std::uint64_t seed) {
    std::vector<int> orbits;
    if (orbit) {
        table_row(*orbit);
        orbits.push_back(*orbit);
    } else {
        for (int n = 1; n <= 26; ++n) orbits.push_back(n);
    }
    std::mt19937_64 rng(seed);
    const auto& cf = closed_form_orbits();
    Json results = Json::array();
    bool all = true;
    for (int n : orbits) {
        Json checks;
        checks["table"] = check_table(n);
        checks["game"] = check_game(n, seed);
        if (std::find(cf.begin(), cf.end(), n) != cf.end()) checks["locus_agreement"] = check_locus(n, rng);
        if (n == 5) checks.update(check_tangential(rng));
        for (auto& [k, v] : checks.items()) all = all && v.get<bool>();
        results.push_back({{"orbit", n}, {"checks", checks}});
    }
    return {{"passed", all}, {"seed", seed}, {"results", results}};
}

}  // namespace declocus
