#pragma once

#include <cstdint>

#include "zsum/extensive_game.hpp"
#include "zsum/matrix_game.hpp"

namespace zsum {

// Rock-paper-scissors-quit: the 4x4 game whose fourth strategy Q ties
// against R and S, beats P, and loses to itself. Row/column order R, P, S, Q.
MatrixGame rpsq();

// m x n game with payoffs uniform on [-1, 1], each drawn as an exact dyadic
// rational with denominator 2^52. The generator (mt19937_64, top 53 bits per
// draw, row-major order) is part of the contract: the same seed yields the
// same game on every platform.
MatrixGame random_matrix_game(std::size_t m, std::size_t n, std::uint64_t seed);

// Stateless-style seed sequencer used to derive independent per-trial seeds
// from one experiment seed.
std::uint64_t splitmix64(std::uint64_t& state);

// One-bet poker with an n-card deck (cards 1..n, higher wins) and antes of 1.
// A single root chance node deals every ordered pair (i to player 1, j to
// player 2), i != j, with probability 1/(n(n-1)). Player 1 bets or checks;
// facing a bet, player 2 calls (showdown for +-2) or folds (+1 to player 1);
// facing a check, player 2 bets or checks (showdown for +-1); facing a
// check-bet, player 1 calls (+-2) or folds (-1). Information sets group
// nodes by own card and public history: "P1:<c>", "P1:<c>:cb", "P2:<c>:b",
// "P2:<c>:k". Throws std::invalid_argument when n < 2.
GameTree kuhn(int n);

// A matrix game as a two-move tree: player 1 picks a row (actions r1..rm,
// infoset "P1"), then player 2 picks a column (actions c1..cn) without
// observing the row, so all of player 2's nodes share infoset "P2".
GameTree matrix_game_tree(const MatrixGame& g);

}  // namespace zsum
