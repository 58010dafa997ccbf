#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "zsum/extensive_game.hpp"
#include "zsum/game_zoo.hpp"
#include "zsum/sequence_analysis.hpp"
#include "zsum/strategic_analysis.hpp"

using namespace zsum;

namespace {

// ---------------------------------------------------------------------------
// Normal-form oracle: enumerate every pure strategy (one action label per
// infoset) of both players, tabulate chance-weighted payoffs by walking the
// tree, and solve the resulting matrix game. Deliberately shares no code
// with the sequence-form pipeline.
// ---------------------------------------------------------------------------

struct OracleInfoset {
  std::string name;
  std::vector<std::string> actions;
};

using PureStrategy = std::map<std::string, std::string>;  // infoset -> action

std::vector<OracleInfoset> oracle_infosets(const GameTree& t, Player p) {
  std::vector<OracleInfoset> out;
  std::set<std::string> seen;
  for (const auto& node : t.nodes) {
    const auto* pn = std::get_if<PlayerNode>(&node);
    if (!pn || pn->owner != p || !seen.insert(pn->infoset).second) continue;
    OracleInfoset is{pn->infoset, {}};
    for (const auto& a : pn->actions) is.actions.push_back(a.action);
    out.push_back(std::move(is));
  }
  return out;
}

std::vector<PureStrategy> all_pure_strategies(const std::vector<OracleInfoset>& sets) {
  std::size_t total = 1;
  for (const auto& s : sets) total *= s.actions.size();
  std::vector<PureStrategy> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    PureStrategy choice;
    std::size_t c = code;
    for (const auto& s : sets) {
      choice[s.name] = s.actions[c % s.actions.size()];
      c /= s.actions.size();
    }
    out.push_back(std::move(choice));
  }
  return out;
}

Rational pure_payoff(const GameTree& t, NodeId id, const PureStrategy& s1,
                     const PureStrategy& s2) {
  const GameNode& node = t.nodes.at(id);
  if (const auto* term = std::get_if<TerminalNode>(&node)) return term->payoff;
  if (const auto* c = std::get_if<ChanceNode>(&node)) {
    Rational sum(0);
    for (const auto& b : c->branches) sum += b.prob * pure_payoff(t, b.child, s1, s2);
    return sum;
  }
  const auto& p = std::get<PlayerNode>(node);
  const std::string& want = (p.owner == Player::one ? s1 : s2).at(p.infoset);
  for (const auto& a : p.actions)
    if (a.action == want) return pure_payoff(t, a.child, s1, s2);
  throw std::logic_error("oracle strategy names a missing action");
}

// Full normal form with duplicate rows/columns merged (betting makes a later
// own infoset unreachable, so strategies differing only there coincide).
MatrixGame oracle_normal_form(const GameTree& t) {
  auto rows = all_pure_strategies(oracle_infosets(t, Player::one));
  auto cols = all_pure_strategies(oracle_infosets(t, Player::two));
  std::vector<std::vector<Rational>> matrix;
  for (const auto& r : rows) {
    std::vector<Rational> line;
    line.reserve(cols.size());
    for (const auto& c : cols) line.push_back(pure_payoff(t, t.root, r, c));
    matrix.push_back(std::move(line));
  }
  std::sort(matrix.begin(), matrix.end());
  matrix.erase(std::unique(matrix.begin(), matrix.end()), matrix.end());
  // Transpose, dedupe columns the same way, transpose back.
  std::vector<std::vector<Rational>> tr(matrix[0].size(),
                                        std::vector<Rational>(matrix.size()));
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j) tr[j][i] = matrix[i][j];
  std::sort(tr.begin(), tr.end());
  tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
  MatrixGame g;
  g.payoffs.assign(matrix.size(), std::vector<Rational>(tr.size()));
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < tr.size(); ++j) g.payoffs[i][j] = tr[j][i];
  return g;
}

bool plan_is_valid(const SequenceForm& sf, Player p, const std::vector<Rational>& plan) {
  const int seat = player_index(p) - 1;
  const auto& M = seat == 0 ? sf.E : sf.F;
  const auto& rhs = seat == 0 ? sf.e : sf.f;
  if (plan.size() != sf.sequences[seat].size()) return false;
  for (const auto& x : plan)
    if (x < Rational(0)) return false;
  for (std::size_t r = 0; r < M.size(); ++r) {
    Rational dot(0);
    for (std::size_t i = 0; i < plan.size(); ++i) dot += M[r][i] * plan[i];
    if (dot != rhs[r]) return false;
  }
  return true;
}

Rational plan_payoff(const SequenceForm& sf, const std::vector<Rational>& x,
                     const std::vector<Rational>& y) {
  Rational total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < y.size(); ++j) total += x[i] * sf.payoff[i][j] * y[j];
  }
  return total;
}

const ActionClassification& row_of(const TreeClassification& tc, Player p,
                                   const std::string& infoset, const std::string& action) {
  for (const auto& row : tc.actions)
    if (row.player == p && row.infoset == infoset && row.action == action) return row;
  FAIL("no classification row for ", infoset, " / ", action);
  return tc.actions.front();
}

}  // namespace

TEST_SUITE("sequence") {

TEST_CASE("kuhn(3) value matches the brute-force normal form") {
  GameTree t = kuhn(3);
  MatrixGame nf = oracle_normal_form(t);
  // 2^6 player-1 strategies collapse to 27 distinct rows; player 2 keeps 64.
  CHECK(nf.rows() == 27);
  CHECK(nf.cols() == 64);
  CHECK(solve_value(nf, Player::one).value == Rational(-1, 18));

  SequenceForm sf = to_sequence_form(t);
  SequenceValue v1 = solve_sequence_value(sf, Player::one);
  SequenceValue v2 = solve_sequence_value(sf, Player::two);
  CHECK(v1.value == Rational(-1, 18));
  CHECK(v2.value == Rational(1, 18));
  CHECK(plan_is_valid(sf, Player::one, v1.plan));
  CHECK(plan_is_valid(sf, Player::two, v2.plan));
  // Optimal plans face to face realize exactly the game value.
  CHECK(plan_payoff(sf, v1.plan, v2.plan) == Rational(-1, 18));
}

TEST_CASE("a bare terminal is a game whose value is its payoff") {
  GameTree t;
  t.nodes.emplace_back(TerminalNode{Rational(7)});
  t.root = 0;
  SequenceForm sf = to_sequence_form(t);
  CHECK(solve_sequence_value(sf, Player::one).value == Rational(7));
  CHECK(solve_sequence_value(sf, Player::two).value == Rational(-7));
}

TEST_CASE("matrix embedding and direct matrix analysis agree") {
  // The LP verdicts must coincide exactly: same value, same per-strategy
  // mistake and strong-mistake probabilities (the tree actions r1..rm are
  // player 1's pure strategies, c1..cn player 2's).
  for (std::uint64_t seed : {11u, 23u, 47u, 91u}) {
    CAPTURE(seed);
    MatrixGame g = random_matrix_game(4, 4, seed);
    TreeClassification tc = classify_all_actions(matrix_game_tree(g));
    CHECK(tc.game_value == solve_value(g, Player::one).value);
    for (int seat = 0; seat < 2; ++seat) {
      Player p = seat == 0 ? Player::one : Player::two;
      GameClassification mc = classify_strategies(g, p);
      for (std::size_t k = 0; k < 4; ++k) {
        const std::string name = (seat == 0 ? "r" : "c") + std::to_string(k + 1);
        const auto& row = row_of(tc, p, seat == 0 ? "P1" : "P2", name);
        CAPTURE(name);
        CHECK(row.mistake == mc.strategies[k].mistake);
        CHECK(row.strong_mistake == mc.strategies[k].strong_mistake);
        CHECK(row.max_prob == mc.strategies[k].max_prob);
        CHECK(row.strong_max_prob == mc.strategies[k].strong_max_prob);
        CHECK(!row.unreachable);
      }
    }
  }
}

TEST_CASE("rpsq embedding flags the quit strategy") {
  TreeClassification tc = classify_all_actions(matrix_game_tree(rpsq()));
  CHECK(tc.game_value == Rational(0));
  const auto& quit = row_of(tc, Player::two, "P2", "c4");
  CHECK(quit.mistake);
  CHECK(quit.strong_mistake);
  CHECK(quit.max_prob == Rational(0));
  // Player 2's fourth column loses to a uniform mix but no single column
  // pair reveals it; the first three strategies stay equilibrium-playable.
  for (std::size_t j = 1; j <= 3; ++j) {
    const auto& row = row_of(tc, Player::two, "P2", "c" + std::to_string(j));
    CHECK(!row.mistake);
    CHECK(row.max_prob > Rational(0));
  }
  // Player 1's quit survives in equilibria (it mimics rock except against
  // itself), but no undominated equilibrium touches it: a strong mistake.
  const auto& r4 = row_of(tc, Player::one, "P1", "r4");
  CHECK(!r4.mistake);
  CHECK(r4.max_prob == Rational(1, 3));
  CHECK(r4.strong_mistake);
  CHECK(r4.strong_max_prob == Rational(0));
  CHECK(!row_of(tc, Player::one, "P1", "r1").mistake);
}

TEST_CASE("uniform_realization_plan halves mass at every infoset") {
  SequenceForm sf = to_sequence_form(kuhn(3));
  for (Player p : {Player::one, Player::two}) {
    auto plan = uniform_realization_plan(sf, p);
    REQUIRE(plan.size() == 13);
    CHECK(plan[0] == Rational(1));
    CHECK(plan_is_valid(sf, p, plan));
    for (const auto& x : plan) CHECK(x > Rational(0));
  }
  auto plan = uniform_realization_plan(sf, Player::one);
  std::size_t bet1 = find_sequence(sf, Player::one, "P1:1", "bet");
  std::size_t call1 = find_sequence(sf, Player::one, "P1:1:cb", "call");
  CHECK(plan[bet1] == Rational(1, 2));
  CHECK(plan[call1] == Rational(1, 4));
}

TEST_CASE("find_sequence rejects unknown names") {
  SequenceForm sf = to_sequence_form(kuhn(3));
  CHECK_THROWS_AS(find_sequence(sf, Player::one, "P1:9", "bet"), std::invalid_argument);
  CHECK_THROWS_AS(find_sequence(sf, Player::one, "P1:1", "raise"), std::invalid_argument);
  CHECK_THROWS_AS(find_sequence(sf, Player::two, "P1:1", "bet"), std::invalid_argument);
  CHECK_THROWS_AS(is_mistake_action(sf, Player::one, "P1:1", "raise"),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_strong_mistake_action(sf, Player::two, "nowhere", "bet"),
                  std::invalid_argument);
}

TEST_CASE("strong test rejects plans with a zero behavioral probability") {
  SequenceForm sf = to_sequence_form(kuhn(3));
  auto plan = uniform_realization_plan(sf, Player::two);
  // Shift all of P2:1:b's mass onto 'call': still a valid plan, but 'fold'
  // now has behavioral probability zero, so it is not fully mixed.
  std::size_t call = find_sequence(sf, Player::two, "P2:1:b", "call");
  std::size_t fold = find_sequence(sf, Player::two, "P2:1:b", "fold");
  plan[call] += plan[fold];
  plan[fold] = Rational(0);
  REQUIRE(plan_is_valid(sf, Player::two, plan));
  CHECK_THROWS_AS(
      is_strong_mistake_action(sf, Player::one, "P1:1", "bet", plan),
      std::invalid_argument);
  // A plan violating F y = f is rejected as well.
  auto broken = uniform_realization_plan(sf, Player::two);
  broken[call] += Rational(1, 100);
  CHECK_THROWS_AS(
      is_strong_mistake_action(sf, Player::one, "P1:1", "bet", broken),
      std::invalid_argument);
  // Wrong length.
  CHECK_THROWS_AS(
      is_strong_mistake_action(sf, Player::one, "P1:1", "bet", {Rational(1)}),
      std::invalid_argument);
}

TEST_CASE("kuhn(3) single-action verdicts") {
  SequenceForm sf = to_sequence_form(kuhn(3));
  // Calling a bet holding the lowest card is strictly dominated, hence a
  // mistake; the strong verdict follows automatically.
  auto m = is_mistake_action(sf, Player::one, "P1:1:cb", "call");
  CHECK(m.verdict);
  CHECK(m.max_prob == Rational(0));
  auto s = is_strong_mistake_action(sf, Player::one, "P1:1:cb", "call");
  CHECK(s.verdict);
  // Betting the middle card is famously never played at equilibrium.
  CHECK(is_mistake_action(sf, Player::one, "P1:2", "bet").verdict);
  // Player 2's optimal strategy is unique, so slow-playing the best card is
  // a mistake even though it is only weakly dominated.
  auto slow = is_mistake_action(sf, Player::two, "P2:3:k", "check");
  CHECK(slow.verdict);
  CHECK(slow.max_prob == Rational(0));
  CHECK(is_strong_mistake_action(sf, Player::two, "P2:3:k", "check").verdict);
  // Bluff-betting the lowest card survives at up to one third; betting the
  // best card can reach probability one.
  auto bluff = is_mistake_action(sf, Player::one, "P1:1", "bet");
  CHECK(!bluff.verdict);
  CHECK(bluff.max_prob == Rational(1, 3));
  CHECK(is_mistake_action(sf, Player::one, "P1:3", "bet").max_prob == Rational(1));
  // Calling a bet with the middle card stays playable at up to one third.
  auto mid_call = is_mistake_action(sf, Player::two, "P2:2:b", "call");
  CHECK(!mid_call.verdict);
  CHECK(mid_call.max_prob == Rational(1, 3));
}

TEST_CASE("classification table on kuhn(4) reproduces the known counts") {
  TreeClassification tc = classify_all_actions(kuhn(4));
  CHECK(tc.game_value == solve_sequence_value(to_sequence_form(kuhn(4)), Player::one).value);
  REQUIRE(tc.actions.size() == 32);

  int mistakes[2] = {0, 0}, strong[2] = {0, 0}, weak_dom[2] = {0, 0}, strict_dom[2] = {0, 0};
  for (const auto& row : tc.actions) {
    const int seat = player_index(row.player) - 1;
    mistakes[seat] += row.mistake;
    strong[seat] += row.strong_mistake;
    weak_dom[seat] += row.dominated_weak;
    strict_dom[seat] += row.dominated_strict;

    CHECK(row.max_prob >= Rational(0));
    CHECK(row.max_prob <= Rational(1));
    CHECK(row.strong_max_prob <= row.max_prob);
    if (row.dominated_strict) CHECK(row.dominated_weak);
    if (row.dominated_strict) CHECK(row.mistake);
    if (row.mistake) CHECK(row.strong_mistake);
    CHECK(row.mistake == (row.max_prob == Rational(0)));
    CHECK(row.strong_mistake == (row.strong_max_prob == Rational(0)));
  }
  CHECK(mistakes[0] == 5);
  CHECK(mistakes[1] == 4);
  CHECK(weak_dom[0] == 2);
  CHECK(weak_dom[1] == 3);
  // In kuhn no infoset is shut out of every equilibrium.
  for (const auto& row : tc.actions) CHECK(!row.unreachable);
  // Strong mistakes subsume mistakes strictly here: the weakly dominated
  // actions are strong mistakes but not all of them are mistakes.
  CHECK(strong[0] >= mistakes[0]);
  CHECK(strong[1] >= mistakes[1]);
  CHECK(strict_dom[0] + strict_dom[1] == 4);
}

TEST_CASE("classification rows follow sequence order with correct indices") {
  GameTree t = kuhn(4);
  SequenceForm sf = to_sequence_form(t);
  TreeClassification tc = classify_all_actions(t);
  REQUIRE(tc.actions.size() == 32);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto& row = tc.actions[i];
    CHECK(row.player == Player::one);
    CHECK(row.sequence == i + 1);
    CHECK(find_sequence(sf, Player::one, row.infoset, row.action) == row.sequence);
  }
  for (std::size_t i = 16; i < 32; ++i) {
    const auto& row = tc.actions[i];
    CHECK(row.player == Player::two);
    CHECK(row.sequence == i - 15);
    CHECK(find_sequence(sf, Player::two, row.infoset, row.action) == row.sequence);
  }
  CHECK(plan_is_valid(sf, Player::one, tc.witness_plans[0]));
  CHECK(plan_is_valid(sf, Player::two, tc.witness_plans[1]));
  CHECK(plan_is_valid(sf, Player::two, tc.strong_opponent_plans[0]));
  CHECK(plan_is_valid(sf, Player::one, tc.strong_opponent_plans[1]));
  CHECK(plan_payoff(sf, tc.witness_plans[0], tc.witness_plans[1]) == tc.game_value);
}

TEST_CASE("kuhn(5) counts and thread independence") {
  GameTree t = kuhn(5);
  TreeClassification one_thread = classify_all_actions(t, {.threads = 1});
  TreeClassification four_threads = classify_all_actions(t, {.threads = 4});

  int mistakes[2] = {0, 0}, weak_dom[2] = {0, 0};
  for (const auto& row : one_thread.actions) {
    const int seat = player_index(row.player) - 1;
    mistakes[seat] += row.mistake;
    weak_dom[seat] += row.dominated_weak;
  }
  CHECK(mistakes[0] == 5);
  CHECK(mistakes[1] == 7);
  CHECK(weak_dom[0] == 2);
  CHECK(weak_dom[1] == 3);
  CHECK(one_thread.actions.size() == 40);

  CHECK(one_thread.game_value == four_threads.game_value);
  REQUIRE(one_thread.actions.size() == four_threads.actions.size());
  for (std::size_t i = 0; i < one_thread.actions.size(); ++i) {
    const auto& a = one_thread.actions[i];
    const auto& b = four_threads.actions[i];
    CHECK(a.infoset == b.infoset);
    CHECK(a.action == b.action);
    CHECK(a.mistake == b.mistake);
    CHECK(a.strong_mistake == b.strong_mistake);
    CHECK(a.max_prob == b.max_prob);
    CHECK(a.strong_max_prob == b.strong_max_prob);
    CHECK(a.iteratively_dominated == b.iteratively_dominated);
    CHECK(a.unreachable == b.unreachable);
  }
}

TEST_CASE("actions behind an always-avoided branch are marked unreachable") {
  // Player 1 either takes 5 or enters a subgame where every outcome is
  // worse. The entering action is an ordinary mistake; the actions inside
  // the subgame are mistakes by unreachability.
  GameTree t;
  t.nodes.emplace_back(PlayerNode{Player::one, "A", {{"take", 1}, {"enter", 2}}});
  t.nodes.emplace_back(TerminalNode{Rational(5)});
  t.nodes.emplace_back(PlayerNode{Player::one, "B", {{"x", 3}, {"y", 4}}});
  t.nodes.emplace_back(TerminalNode{Rational(1)});
  t.nodes.emplace_back(TerminalNode{Rational(2)});
  t.root = 0;
  TreeClassification tc = classify_all_actions(t);
  CHECK(tc.game_value == Rational(5));

  const auto& enter = row_of(tc, Player::one, "A", "enter");
  CHECK(enter.mistake);
  CHECK(!enter.unreachable);
  for (const char* a : {"x", "y"}) {
    const auto& row = row_of(tc, Player::one, "B", a);
    CHECK(row.mistake);
    CHECK(row.unreachable);
    CHECK(row.max_prob == Rational(0));
  }
  CHECK(!row_of(tc, Player::one, "A", "take").mistake);
}

TEST_CASE("iteratively_dominated marks exactly the eliminated actions") {
  TreeClassification tc = classify_all_actions(kuhn(4));
  auto elim = iterated_action_elimination(kuhn(4), DominanceMode::weak);
  std::set<std::string> removed;
  for (const auto& round : elim.rounds)
    for (const auto& d : round) removed.insert(d.infoset + "/" + d.action);
  int flagged = 0;
  for (const auto& row : tc.actions) {
    const bool hit = removed.count(row.infoset + "/" + row.action) > 0;
    CHECK(row.iteratively_dominated == hit);
    flagged += row.iteratively_dominated;
  }
  CHECK(flagged == 5);
}

}  // TEST_SUITE
