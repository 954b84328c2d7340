#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "declocus/closed_form.hpp"
#include "declocus/selftest.hpp"

using namespace declocus;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("DECLOCUS_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (*s && end && !*end) return v;
        throw Error(ErrorCode::ParseError, "DECLOCUS_SEED must be a non-negative integer");
    }
    return kDefaultGameSeed;
}

LocusVerdict closed_form_verdict(const Tensor<Rational>& t, const RankOne<Rational>& p) {
    OrbitSummary s = classify_summary(t);
    int n = s.orbit.kind == OrbitKind::Orbit ? s.orbit.value : 0;
    const auto& os = closed_form_orbits();
    if (std::find(os.begin(), os.end(), n) == os.end())
        throw Error(ErrorCode::UnsupportedOrbit, "no closed-form locus for " + s.orbit.str());
    if (!(t == normal_form(n))) throw Error(ErrorCode::NotNormalForm, "closed-form strategy needs the normal form T_" + std::to_string(n));
    if (closed_form_predicate(n, p)) return LocusVerdict::forbidden();
    // The predicate decides membership only; the witness comes from the specialized path.
    return locus_membership(t, p, Strategy::Specialized);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbit classification, decomposition loci and TensorGame play for small tensors"};
    app.require_subcommand(1);

    std::string file, rank_one_file, strategy = "specialized";
    std::optional<std::uint64_t> seed;
    std::optional<int> orbit;

    auto* classify_cmd = app.add_subcommand("classify", "orbit, rank and border rank");
    classify_cmd->add_option("FILE", file, "tensor document")->required();

    auto* locus_cmd = app.add_subcommand("locus", "membership of a rank-one tensor in the decomposition locus");
    locus_cmd->add_option("FILE", file, "tensor document")->required();
    locus_cmd->add_option("--rank-one", rank_one_file, "rank-one document")->required();
    locus_cmd->add_option("--strategy", strategy, "generic, specialized or closed-form")
        ->check(CLI::IsMember({"generic", "specialized", "closed-form"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "minimal decomposition of a tangential tensor through a rank-one tensor");
    decompose_cmd->add_option("FILE", file, "tensor document")->required();
    decompose_cmd->add_option("--through", rank_one_file, "rank-one document")->required();

    auto* game_cmd = app.add_subcommand("game", "greedy TensorGame transcript");
    game_cmd->add_option("FILE", file, "tensor document")->required();
    game_cmd->add_option("--seed", seed, "candidate stream seed (default: DECLOCUS_SEED or built-in)");

    auto* selftest_cmd = app.add_subcommand("selftest", "built-in consistency checks");
    selftest_cmd->add_option("--orbit", orbit, "orbit number 1..26 (default: all)");
    selftest_cmd->add_option("--seed", seed, "sampling seed (default: DECLOCUS_SEED or built-in)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit(error_json("ParseError", e.what()));
        return 1;
    }

    try {
        if (classify_cmd->parsed()) {
            emit(report_json(classify_summary(parse_tensor(read_file(file)))));
        } else if (locus_cmd->parsed()) {
            Tensor<Rational> t = parse_tensor(read_file(file));
            RankOne<Rational> p = parse_rank_one(read_file(rank_one_file));
            LocusVerdict v = strategy == "closed-form" ? closed_form_verdict(t, p)
                             : locus_membership(t, p, strategy == "generic" ? Strategy::Generic : Strategy::Specialized);
            emit(verdict_json(v));
        } else if (decompose_cmd->parsed()) {
            Tensor<Rational> t = parse_tensor(read_file(file));
            RankOne<Rational> p = parse_rank_one(read_file(rank_one_file));
            emit(decomposition_json(decompose_tangential(t, p)));
        } else if (game_cmd->parsed()) {
            std::uint64_t s = seed ? *seed : default_seed();
            emit(transcript_json(game_play_greedy(parse_tensor(read_file(file)), s), s));
        } else if (selftest_cmd->parsed()) {
            Json summary = run_selftest(orbit, seed ? *seed : default_seed());
            emit(summary);
            return summary["passed"].get<bool>() ? 0 : 2;
        }
    } catch (const Error& e) {
        emit(error_json(code_name(e.code()), e.what()));
        return is_input_error(e.code()) ? 1 : 2;
    }
    return 0;
}
