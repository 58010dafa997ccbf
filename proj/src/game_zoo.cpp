#include "zsum/game_zoo.hpp"

#include <random>
#include <stdexcept>

namespace zsum {

MatrixGame rpsq() {
  const int a[4][4] = {
      {0, -1, 1, 0},
      {1, 0, -1, 1},
      {-1, 1, 0, 0},
      {0, -1, 1, -1},
  };
  MatrixGame g;
  g.payoffs.assign(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.payoffs[i][j] = Rational(a[i][j]);
  return g;
}

MatrixGame random_matrix_game(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("random game needs at least one strategy per player");
  std::mt19937_64 eng(seed);
  const mpz_class half = mpz_class(1) << 52;
  MatrixGame g;
  g.payoffs.assign(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // top 53 bits of the draw, recentered to [-2^52, 2^52)
      const std::uint64_t u = eng() >> 11;
      mpz_class num(static_cast<long>(u >> 32));
      num <<= 32;
      num += static_cast<long>(u & 0xffffffffull);
      num -= half;
      g.payoffs[i][j] = Rational(num, half);
    }
  }
  return g;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

GameTree kuhn(int n) {
  if (n < 2) throw std::invalid_argument("kuhn poker needs a deck of at least 2 cards");
  GameTree t;
  auto add = [&t](GameNode node) {
    t.nodes.push_back(std::move(node));
    return t.nodes.size() - 1;
  };
  const NodeId root = add(ChanceNode{});
  ChanceNode deal;
  const Rational deal_prob(1, static_cast<long>(n) * (n - 1));
  for (int i = 1; i <= n; ++i) {
    const std::string c1 = std::to_string(i);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const std::string c2 = std::to_string(j);
      auto showdown = [&](int stake) { return Rational(i > j ? stake : -stake); };
      // Player 1 bets: player 2 calls or folds.
      NodeId bet_call = add(TerminalNode{showdown(2)});
      NodeId bet_fold = add(TerminalNode{Rational(1)});
      NodeId p2_bet = add(PlayerNode{
          Player::two, "P2:" + c2 + ":b", {{"call", bet_call}, {"fold", bet_fold}}});
      // Player 1 checks, player 2 bets: player 1 calls or folds.
      NodeId cb_call = add(TerminalNode{showdown(2)});
      NodeId cb_fold = add(TerminalNode{Rational(-1)});
      NodeId p1_cb = add(PlayerNode{
          Player::one, "P1:" + c1 + ":cb", {{"call", cb_call}, {"fold", cb_fold}}});
      NodeId check_check = add(TerminalNode{showdown(1)});
      NodeId p2_check = add(PlayerNode{
          Player::two, "P2:" + c2 + ":k", {{"bet", p1_cb}, {"check", check_check}}});
      NodeId p1 = add(PlayerNode{
          Player::one, "P1:" + c1, {{"bet", p2_bet}, {"check", p2_check}}});
      deal.branches.push_back({"d" + c1 + "_" + c2, deal_prob, p1});
    }
  }
  t.nodes[root] = std::move(deal);
  t.root = root;
  return t;
}

GameTree matrix_game_tree(const MatrixGame& g) {
  if (g.rows() == 0 || g.cols() == 0)
    throw std::invalid_argument("matrix_game_tree needs at least one strategy per player");
  GameTree t;
  t.nodes.emplace_back(PlayerNode{Player::one, "P1", {}});
  PlayerNode row_choice{Player::one, "P1", {}};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    PlayerNode col_choice{Player::two, "P2", {}};
    for (std::size_t j = 0; j < g.cols(); ++j) {
      t.nodes.emplace_back(TerminalNode{g.payoffs[i][j]});
      col_choice.actions.push_back({"c" + std::to_string(j + 1), t.nodes.size() - 1});
    }
    t.nodes.emplace_back(std::move(col_choice));
    row_choice.actions.push_back({"r" + std::to_string(i + 1), t.nodes.size() - 1});
  }
  t.nodes[0] = std::move(row_choice);
  t.root = 0;
  return t;
}

}  // namespace zsum
