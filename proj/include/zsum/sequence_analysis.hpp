#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "zsum/extensive_game.hpp"
#include "zsum/rational.hpp"
#include "zsum/strategic_analysis.hpp"

namespace zsum {

// Sequence-form LP analyses. All of them model the analyzed player as the
// realization-plan maximizer x over the constraints E x = e, x >= 0, with an
// auxiliary free vector q (one entry per opponent infoset plus one) such
// that the opponent's every sequence column satisfies (A^T x)_j >= (F^T q)_j
// and the objective is the first entry of q, the analyzed player's
// guaranteed payoff. Player 2 runs the identical machinery on the negated
// transposed payoff matrix with the roles of (E, e) and (F, f) swapped.

struct SequenceValue {
  Rational value;              // maximin value to the analyzed player
  std::vector<Rational> plan;  // an optimal realization plan, indexed by sequence
};

SequenceValue solve_sequence_value(const SequenceForm& sf, Player player);

// Locates the sequence ending in (infoset, action) for the player. Throws
// std::invalid_argument for an unknown infoset or action.
std::size_t find_sequence(const SequenceForm& sf, Player player, const std::string& infoset,
                          const std::string& action);

// A mistake action carries probability zero in every optimal realization
// plan: pin the value, then maximize the sequence variable of the action
// over the optimal face. The verdict is the exact test optimum == 0.
MistakeResult is_mistake_action(const SequenceForm& sf, Player player,
                                const std::string& infoset, const std::string& action);

// The uniform behavioral strategy (probability 1/|actions| at every infoset)
// realized as a plan by multiplying along each sequence. Fully mixed: every
// infoset is reached with positive probability and every action has positive
// behavioral weight.
std::vector<Rational> uniform_realization_plan(const SequenceForm& sf, Player player);

// Strong mistakes additionally pin the best payoff achievable against a
// fully mixed opponent plan (default: uniform behavioral), restricting the
// face to plans that are best responses to it and therefore undominated.
// The plan must satisfy F y = f, y >= 0 exactly and have strictly positive
// behavioral probability at every action of every infoset it reaches; a zero
// behavioral probability is rejected with std::invalid_argument.
MistakeResult is_strong_mistake_action(const SequenceForm& sf, Player player,
                                       const std::string& infoset, const std::string& action);
MistakeResult is_strong_mistake_action(const SequenceForm& sf, Player player,
                                       const std::string& infoset, const std::string& action,
                                       const std::vector<Rational>& fully_mixed_plan);

struct ActionClassification {
  Player player = Player::one;
  std::string infoset;
  std::string action;
  std::size_t sequence = 0;  // the owner's sequence index ending in this action

  bool dominated_strict = false;       // leaf-payoff criterion
  bool dominated_weak = false;         // leaf-payoff criterion, weak mode
  bool iteratively_dominated = false;  // removed by weak-mode iterated elimination
  bool mistake = false;
  bool strong_mistake = false;
  // The infoset is unreachable in every equilibrium (the owner's sequence
  // leading to it is itself a mistake), so the literal mistake verdict above
  // is forced no matter how the action would perform off-path.
  bool unreachable = false;

  Rational max_prob;         // maximum realization probability over optimal plans
  Rational strong_max_prob;  // same under the added best-response pin
};

struct ClassifyOptions {
  // Worker threads for the per-action LP sweeps; results are merged by
  // sequence order and do not depend on the thread count.
  int threads = 1;
};

struct TreeClassification {
  Rational game_value;                             // to player 1
  std::array<std::vector<Rational>, 2> witness_plans;  // optimal plan per player
  // The fully mixed opponent plans the strong verdicts were computed
  // against: strong_opponent_plans[0] is the player-2 plan used while
  // analyzing player 1, and vice versa.
  std::array<std::vector<Rational>, 2> strong_opponent_plans;
  // Player 1's non-empty sequences in index order, then player 2's.
  std::vector<ActionClassification> actions;
};

// Full dominance / elimination / mistake / strong-mistake report for every
// action (equivalently, every non-empty sequence) of both players.
TreeClassification classify_all_actions(const GameTree& t, const ClassifyOptions& options = {});

}  // namespace zsum
