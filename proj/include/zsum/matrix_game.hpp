#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "zsum/rational.hpp"

namespace zsum {

enum class Player { one = 1, two = 2 };

constexpr Player opponent(Player p) { return p == Player::one ? Player::two : Player::one; }
constexpr int player_index(Player p) { return p == Player::one ? 1 : 2; }

// Two-player zero-sum game in strategic form. Entries are payoffs to
// player 1 (the row player); player 2 receives the negation.
struct MatrixGame {
  std::vector<std::vector<Rational>> payoffs;

  std::size_t rows() const { return payoffs.size(); }
  std::size_t cols() const { return payoffs.empty() ? 0 : payoffs.front().size(); }
  std::size_t strategies(Player p) const { return p == Player::one ? rows() : cols(); }
};

// The game from player 2's seat: payoffs to player 2 as the row maximizer.
MatrixGame negated_transpose(const MatrixGame& g);

// Text format: first line "m n", then m rows of n whitespace-separated
// rational literals (payoffs to player 1). Parsing throws std::runtime_error
// with a description on malformed input.
MatrixGame read_matrix_game(std::istream& in);
MatrixGame read_matrix_game(const std::string& text);
void write_matrix_game(std::ostream& out, const MatrixGame& g);

}  // namespace zsum
