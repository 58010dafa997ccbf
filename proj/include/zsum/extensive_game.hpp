#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "zsum/matrix_game.hpp"
#include "zsum/rational.hpp"
#include "zsum/strategic_analysis.hpp"

namespace zsum {

// Extensive-form two-player zero-sum games with chance moves and information
// sets. Nodes live in an arena indexed by NodeId; payoffs are to player 1.
// Trees are immutable after construction: transformations return new trees.

using NodeId = std::size_t;

struct ChanceBranch {
  std::string label;
  Rational prob;
  NodeId child = 0;
};

struct ChanceNode {
  std::vector<ChanceBranch> branches;
};

struct ActionBranch {
  std::string action;
  NodeId child = 0;
};

struct PlayerNode {
  Player owner = Player::one;
  std::string infoset;  // information-set name, unique across both players
  std::vector<ActionBranch> actions;
};

struct TerminalNode {
  Rational payoff;  // to player 1
};

using GameNode = std::variant<ChanceNode, PlayerNode, TerminalNode>;

struct GameTree {
  std::vector<GameNode> nodes;
  NodeId root = 0;

  std::size_t size() const { return nodes.size(); }
};

// Structural checks. Returns one human-readable message per violation, empty
// iff the tree is well formed:
//   - node/child ids in range, every non-root node has exactly one parent,
//     every node reachable from the root;
//   - chance branches have positive probabilities summing to 1 and distinct
//     labels;
//   - player nodes have at least one action with distinct labels; nodes
//     sharing an information set share its owner and action-label set;
//   - perfect recall: all nodes of an information set see the same sequence
//     of (infoset, action) pairs of the owning player on the path from the
//     root.
std::vector<std::string> validate(const GameTree& t);

struct DominatedAction {
  Player player = Player::one;
  std::string infoset;
  std::string action;        // the dominated action
  std::string dominated_by;  // a witnessing sibling action (first in order)
};

// Leaf-payoff action dominance. Pooling the terminals reachable after each
// action across every node of the information set (payoffs from the owner's
// seat), action a' is strictly dominated by sibling a when min(a) > max(a'),
// and weakly dominated when min(a) >= max(a') unless all leaves under both
// actions carry one identical payoff. Weak mode reports strict dominations
// too. Output order follows depth-first infoset discovery, then the
// infoset's action order.
std::vector<DominatedAction> dominated_actions(const GameTree& t, DominanceMode mode);

// Deletes the action (and its subtree) at every node of the information set
// and compacts the arena; surviving payoffs and chance probabilities are
// untouched. Throws std::invalid_argument for an unknown player/infoset/
// action combination or when the action is the infoset's last one.
GameTree remove_action(const GameTree& t, Player player, const std::string& infoset,
                       const std::string& action);

struct ActionEliminationResult {
  GameTree reduced;
  // One entry per round: the dominations detected at the round's start that
  // were actually applied (an entry is skipped only when an earlier removal
  // in the same round already deleted its whole information set).
  std::vector<std::vector<DominatedAction>> rounds;
};

// Runs dominated_actions / remove_action rounds to a fixed point.
ActionEliminationResult iterated_action_elimination(const GameTree& t, DominanceMode mode);

// Text format, line oriented:
//   node <id> chance {<label>:<prob>:<child>,...}
//   node <id> player <1|2> infoset <name> {<action>:<child>,...}
//   node <id> terminal <payoff>
//   root <id>
// Probabilities and payoffs are exact rational literals. Outcome and action
// labels may not contain ':', ',', braces, or whitespace; infoset names may
// not contain whitespace. Blank lines and lines starting with '#' are
// ignored. Ids may be arbitrary and are renumbered densely in ascending
// order on read. Parsing throws std::runtime_error naming the offending
// line.
GameTree read_game_tree(std::istream& in);
GameTree read_game_tree(const std::string& text);
void write_game_tree(std::ostream& out, const GameTree& t);
std::string write_game_tree(const GameTree& t);

// Sequence form of a perfect-recall tree. A player's sequence is the chain
// of (infoset, action) pairs of their own moves on a path; index 0 is always
// the empty sequence and the rest follow depth-first discovery order, which
// makes every index below stable for a given tree.
struct SequenceForm {
  struct Sequence {
    std::size_t parent = 0;   // prefix sequence (itself for the empty one)
    std::size_t infoset = 0;  // owning player's infoset index of the last action
    std::string action;       // last action label; empty for the empty sequence
  };
  struct Infoset {
    std::string name;
    std::size_t parent_seq = 0;            // owner's sequence leading here
    std::vector<std::string> actions;      // canonical action order
    std::vector<std::size_t> action_seqs;  // sequence index per action
  };

  std::array<std::vector<Sequence>, 2> sequences;  // [0]: player 1, [1]: player 2
  std::array<std::vector<Infoset>, 2> infosets;

  // payoff[i][j] = sum of chance_reach * payoff over terminals whose pair of
  // player sequences is exactly (i, j); payoffs to player 1.
  std::vector<std::vector<Rational>> payoff;

  // Realization-plan constraints E x = e (player 1) and F y = f (player 2):
  // row 0 pins the empty sequence to 1; one further row per infoset u states
  // sum of u's action sequences - u's parent sequence = 0.
  std::vector<std::vector<Rational>> E, F;
  std::vector<Rational> e, f;

  const std::vector<Sequence>& seqs(Player p) const {
    return sequences[p == Player::one ? 0 : 1];
  }
  const std::vector<Infoset>& sets(Player p) const {
    return infosets[p == Player::one ? 0 : 1];
  }
};

// Converts a valid tree. Throws std::invalid_argument on a perfect-recall
// violation or an inconsistent information set (callers wanting a full
// diagnosis should run validate first).
SequenceForm to_sequence_form(const GameTree& t);

}  // namespace zsum
