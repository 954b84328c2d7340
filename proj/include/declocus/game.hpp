#ifndef DECLOCUS_GAME_HPP
#define DECLOCUS_GAME_HPP

#include <cstdint>
#include <vector>

#include "tensor.hpp"

namespace declocus {

struct GameMove {
    RankOne<Rational> rank_one;
    Rational lambda;
};

struct GameState {
    Tensor<Rational> current;
    std::vector<GameMove> moves;
    size_t initial_rank = 0;
    size_t rank = 0;  // rank of `current`

    bool over() const { return current.is_zero(); }
};

inline constexpr std::uint64_t kDefaultGameSeed = 0x7e2503a1u;

GameState game_start(const Tensor<Rational>& t);

// Replaces current by current - lam * p when that drops the rank by exactly one.
GameState game_step(const GameState& s, const RankOne<Rational>& p, const Rational& lam);

// Plays to zero, one rank drop per move.
GameState game_play_greedy(const Tensor<Rational>& t, std::uint64_t seed = kDefaultGameSeed);

// Rank-one tensor through the nonzero entry `at` of t whose subtraction with
// lambda = 1 / t[at]^(k-1) is a pivot step of the flattening along `axis`.
GameMove pivot_move(const Tensor<Rational>& t, size_t axis, const Index& at);

}  // namespace declocus

#endif
