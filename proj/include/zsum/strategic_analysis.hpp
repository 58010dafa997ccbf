#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zsum/matrix_game.hpp"
#include "zsum/rational.hpp"

namespace zsum {

// All analyses take the game as stated (payoffs to player 1) plus the seat to
// analyze. Player 2 is handled by rerunning the identical machinery on the
// negated transpose, so there is exactly one formulation to get right.

struct ValueSolution {
  Rational value;                 // game value to the analyzed player
  std::vector<Rational> strategy; // a maximin-optimal mixed strategy
};

// Maximin value and an optimal strategy via the zero-sum LP. Always feasible
// and bounded, so this cannot fail on a valid game.
ValueSolution solve_value(const MatrixGame& g, Player player);

struct MistakeResult {
  bool verdict = false;  // true iff max_prob == 0 (an exact test)
  Rational max_prob;     // maximum probability the strategy carries in any
                         // equilibrium strategy of the analyzed player
};

// A strategy is a mistake when every equilibrium plays it with probability
// zero: solve the value LP, pin the value, then maximize the strategy's
// weight over the optimal face.
MistakeResult is_mistake(const MatrixGame& g, Player player, std::size_t k);

// Strong mistakes additionally pin the best payoff achievable against a
// fully mixed opponent strategy (default: uniform), which restricts the face
// to undominated equilibrium strategies. `fully_mixed_opponent` must have
// strictly positive entries summing to 1; a zero entry is rejected with
// std::invalid_argument.
MistakeResult is_strong_mistake(const MatrixGame& g, Player player, std::size_t k);
MistakeResult is_strong_mistake(const MatrixGame& g, Player player, std::size_t k,
                                const std::vector<Rational>& fully_mixed_opponent);

// Batched variants: one warm-started solver sweeps every strategy, so the
// value LP (and, for the strong test, the best-response pin) is solved once.
std::vector<Rational> mistake_probabilities(const MatrixGame& g, Player player);
std::vector<Rational> strong_mistake_probabilities(const MatrixGame& g, Player player);
std::vector<Rational> strong_mistake_probabilities(
    const MatrixGame& g, Player player, const std::vector<Rational>& fully_mixed_opponent);

struct PureDominance {
  std::vector<std::size_t> strict_by;  // strategies beating k in every column
  std::vector<std::size_t> weak_by;    // >= everywhere and > somewhere
};
PureDominance dominance_pure(const MatrixGame& g, Player player, std::size_t k);

enum class DominanceMode { strict, weak };

struct MixedDominance {
  bool dominated = false;
  // Mixture over the player's other pure strategies (entry k is zero).
  std::optional<std::vector<Rational>> dominator;
};

// Strict mode maximizes the worst-case margin of a mixture over k (dominated
// iff the optimum is positive); weak mode requires nonnegative margins in
// every column and maximizes the total margin (dominated iff positive).
MixedDominance dominance_mixed(const MatrixGame& g, Player player, std::size_t k,
                               DominanceMode mode);

struct EliminationStep {
  Player player;
  std::size_t index;      // removed strategy, original numbering
  std::size_t dominator;  // a dominating strategy at removal time, original numbering
  std::size_t round;      // full alternation pass, starting at 1
};

struct EliminationResult {
  std::vector<std::size_t> surviving_rows;  // original indices, ascending
  std::vector<std::size_t> surviving_cols;
  std::vector<EliminationStep> trace;
};

// Iterated elimination by pure dominance. Fixed, documented order: alternate
// seats starting with player 1; within a seat remove the lowest-index
// dominated strategy; re-scan the reduced game after every removal. Strict
// mode is order-independent; weak mode is not, which is why the policy is
// pinned.
EliminationResult iterated_elimination(const MatrixGame& g, DominanceMode mode);

// Reduced game with the given strategies of one player deleted. Throws
// std::invalid_argument on out-of-range indices or if nothing would remain.
MatrixGame remove_strategies(const MatrixGame& g, Player player,
                             std::vector<std::size_t> indices);

struct StrategyClassification {
  bool strictly_dominated = false;             // by some pure strategy
  bool weakly_dominated = false;               // by some pure strategy
  bool iteratively_strictly_dominated = false;
  bool iteratively_weakly_dominated = false;
  bool mixed_dominated = false;                // strict-mode mixed dominance
  bool mistake = false;
  bool strong_mistake = false;
  Rational max_prob;         // from the mistake sweep
  Rational strong_max_prob;  // from the strong-mistake sweep
};

struct GameClassification {
  Rational game_value;                        // to the analyzed player
  std::vector<Rational> witness_equilibrium;  // maximin strategy from the value LP
  std::vector<StrategyClassification> strategies;
};

// Full per-strategy report for one seat. The fully mixed strategy used by
// the strong test defaults to uniform and is part of the result's meaning,
// so callers rendering reports should state it.
GameClassification classify_strategies(const MatrixGame& g, Player player);
GameClassification classify_strategies(const MatrixGame& g, Player player,
                                       const std::vector<Rational>& fully_mixed_opponent);

}  // namespace zsum
