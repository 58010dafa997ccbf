#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zsum/experiments.hpp"
#include "zsum/extensive_game.hpp"
#include "zsum/game_zoo.hpp"
#include "zsum/matrix_game.hpp"
#include "zsum/sequence_analysis.hpp"
#include "zsum/strategic_analysis.hpp"

namespace {

using namespace zsum;

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

struct Format {
  int decimal = -1;  // -1 renders exact fractions, >= 0 fixed-point digits
  std::string operator()(const Rational& r) const {
    return decimal < 0 ? r.to_string() : r.to_decimal(decimal);
  }
};

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* bit(bool b) { return b ? "1" : "0"; }

std::string strategy_name(Player p, std::size_t k) {
  return (p == Player::one ? "r" : "c") + std::to_string(k + 1);
}

std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "  ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Input loading: unreadable or malformed files throw std::runtime_error,
// which main maps to exit code 2.
// ---------------------------------------------------------------------------

MatrixGame load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  return read_matrix_game(in);
}

GameTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file '" + path + "'");
  GameTree t = read_game_tree(in);
  auto violations = validate(t);
  if (!violations.empty())
    throw std::runtime_error("invalid game tree in '" + path + "': " + violations.front());
  return t;
}

// ---------------------------------------------------------------------------
// Common flag bundle
// ---------------------------------------------------------------------------

struct Options {
  std::string matrix_path;
  std::string tree_path;
  int player = 0;  // 0: both seats where that makes sense
  std::string mode = "weak";
  bool strong = false;
  std::vector<int> n_values;
  int m = 3;
  int trials = 1000;
  std::uint64_t seed = 1;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  std::string output = "text";
  int decimal = -1;

  bool records() const { return output == "records"; }
  Format fmt() const { return Format{decimal}; }
  DominanceMode dominance_mode() const {
    return mode == "strict" ? DominanceMode::strict : DominanceMode::weak;
  }
  std::vector<Player> seats() const {
    if (player == 1) return {Player::one};
    if (player == 2) return {Player::two};
    return {Player::one, Player::two};
  }
};

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--output", opt.output, "Report style: text or records")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_option("--decimal", opt.decimal,
                  "Render rationals as fixed-point decimals with this many digits "
                  "(text output only; records always carry exact fractions)")
      ->check(CLI::Range(0, 60));
}

CLI::Option_group* add_input_group(CLI::App* cmd, Options& opt) {
  auto* group = cmd->add_option_group("input", "Game input (exactly one)");
  group->add_option("--matrix", opt.matrix_path, "Matrix-game file (strategic form)");
  group->add_option("--tree", opt.tree_path, "Game-tree file (extensive form)");
  group->require_option(1);
  return group;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

void run_solve(const Options& opt) {
  const Format fmt = opt.fmt();
  const Player p = opt.player == 2 ? Player::two : Player::one;
  const int pi = player_index(p);
  if (!opt.matrix_path.empty()) {
    MatrixGame g = load_matrix(opt.matrix_path);
    ValueSolution sol = solve_value(g, p);
    if (opt.records()) {
      std::cout << "record=value player=" << pi << " value=" << sol.value.to_string() << '\n';
      for (std::size_t k = 0; k < sol.strategy.size(); ++k)
        std::cout << "record=weight player=" << pi << " name=" << strategy_name(p, k)
                  << " prob=" << sol.strategy[k].to_string() << '\n';
    } else {
      std::cout << "game value (player " << pi << "): " << fmt(sol.value) << '\n';
      std::cout << "optimal strategy (player " << pi << "):\n";
      std::vector<std::vector<std::string>> rows;
      for (std::size_t k = 0; k < sol.strategy.size(); ++k)
        rows.push_back({strategy_name(p, k), fmt(sol.strategy[k])});
      std::cout << align_rows(rows);
    }
    return;
  }
  GameTree t = load_tree(opt.tree_path);
  SequenceForm sf = to_sequence_form(t);
  SequenceValue sol = solve_sequence_value(sf, p);
  const auto& seqs = sf.seqs(p);
  const auto& sets = sf.sets(p);
  if (opt.records()) {
    std::cout << "record=value player=" << pi << " value=" << sol.value.to_string() << '\n';
    for (std::size_t i = 1; i < seqs.size(); ++i)
      std::cout << "record=weight player=" << pi << " infoset=" << sets[seqs[i].infoset].name
                << " action=" << seqs[i].action << " prob=" << sol.plan[i].to_string() << '\n';
  } else {
    std::cout << "game value (player " << pi << "): " << fmt(sol.value) << '\n';
    std::cout << "optimal plan (player " << pi
              << "), realization probability by sequence:\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 1; i < seqs.size(); ++i)
      rows.push_back({seqs[i].action + "@" + sets[seqs[i].infoset].name, fmt(sol.plan[i])});
    std::cout << align_rows(rows);
  }
}

// ---------------------------------------------------------------------------
// analyze --matrix
// ---------------------------------------------------------------------------

void analyze_matrix(const Options& opt) {
  const Format fmt = opt.fmt();
  MatrixGame g = load_matrix(opt.matrix_path);
  EliminationResult elim = iterated_elimination(g, opt.dominance_mode());

  std::ostringstream text;
  for (Player p : opt.seats()) {
    const int pi = player_index(p);
    GameClassification cls = classify_strategies(g, p);
    const std::size_t opp_n = g.strategies(opponent(p));
    if (opt.records()) {
      std::cout << "record=value player=" << pi << " value=" << cls.game_value.to_string()
                << '\n';
      for (std::size_t k = 0; k < cls.witness_equilibrium.size(); ++k)
        std::cout << "record=witness player=" << pi << " name=" << strategy_name(p, k)
                  << " prob=" << cls.witness_equilibrium[k].to_string() << '\n';
      for (std::size_t j = 0; j < opp_n; ++j)
        std::cout << "record=strong-opponent for=" << pi
                  << " name=" << strategy_name(opponent(p), j) << " prob="
                  << (Rational(1) / Rational(static_cast<long>(opp_n))).to_string() << '\n';
      for (std::size_t k = 0; k < cls.strategies.size(); ++k) {
        const auto& s = cls.strategies[k];
        std::cout << "record=strategy player=" << pi << " name=" << strategy_name(p, k)
                  << " dominated_strict=" << bit(s.strictly_dominated)
                  << " dominated_weak=" << bit(s.weakly_dominated)
                  << " iter_strict=" << bit(s.iteratively_strictly_dominated)
                  << " iter_weak=" << bit(s.iteratively_weakly_dominated)
                  << " dominated_mixed=" << bit(s.mixed_dominated)
                  << " mistake=" << bit(s.mistake)
                  << " strong_mistake=" << bit(s.strong_mistake)
                  << " max_prob=" << s.max_prob.to_string()
                  << " strong_max_prob=" << s.strong_max_prob.to_string() << '\n';
      }
      continue;
    }
    text << "game value (player " << pi << "): " << fmt(cls.game_value) << '\n';
    text << "witness equilibrium (player " << pi << "):\n";
    std::vector<std::vector<std::string>> wrows;
    for (std::size_t k = 0; k < cls.witness_equilibrium.size(); ++k)
      wrows.push_back({strategy_name(p, k), fmt(cls.witness_equilibrium[k])});
    text << align_rows(wrows);
    text << "player " << pi << " strategies:\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"strategy",    "strict-dom", "weak-dom", "iter-strict",
                                     "iter-weak",   "mixed-dom",  "mistake",  "max-prob"};
    if (opt.strong) {
      head.push_back("strong-mistake");
      head.push_back("strong-max-prob");
    }
    rows.push_back(head);
    for (std::size_t k = 0; k < cls.strategies.size(); ++k) {
      const auto& s = cls.strategies[k];
      std::vector<std::string> row = {strategy_name(p, k),
                                      yn(s.strictly_dominated),
                                      yn(s.weakly_dominated),
                                      yn(s.iteratively_strictly_dominated),
                                      yn(s.iteratively_weakly_dominated),
                                      yn(s.mixed_dominated),
                                      yn(s.mistake),
                                      fmt(s.max_prob)};
      if (opt.strong) {
        row.push_back(yn(s.strong_mistake));
        row.push_back(fmt(s.strong_max_prob));
      }
      rows.push_back(std::move(row));
    }
    text << align_rows(rows);
  }

  if (opt.records()) {
    for (const auto& step : elim.trace)
      std::cout << "record=elimination mode=" << opt.mode << " round=" << step.round
                << " player=" << player_index(step.player)
                << " remove=" << strategy_name(step.player, step.index)
                << " dominated_by=" << strategy_name(step.player, step.dominator) << '\n';
    return;
  }
  if (opt.strong)
    text << "strong verdicts use the uniform mixture over the opponent's strategies\n";
  text << "iterated elimination (" << opt.mode << "): " << elim.trace.size()
       << (elim.trace.size() == 1 ? " removal\n" : " removals\n");
  for (const auto& step : elim.trace)
    text << "  round " << step.round << ": player " << player_index(step.player)
         << " removes " << strategy_name(step.player, step.index) << " (dominated by "
         << strategy_name(step.player, step.dominator) << ")\n";
  std::cout << text.str();
}

// ---------------------------------------------------------------------------
// analyze --tree
// ---------------------------------------------------------------------------

void analyze_tree(const Options& opt) {
  const Format fmt = opt.fmt();
  GameTree t = load_tree(opt.tree_path);
  SequenceForm sf = to_sequence_form(t);
  TreeClassification tc = classify_all_actions(t, {.threads = opt.threads});
  ActionEliminationResult elim = iterated_action_elimination(t, opt.dominance_mode());

  auto wanted = [&](Player p) {
    return opt.player == 0 || opt.player == player_index(p);
  };

  if (opt.records()) {
    for (Player p : opt.seats()) {
      const int pi = player_index(p);
      const int seat = pi - 1;
      const Rational value = p == Player::one ? tc.game_value : -tc.game_value;
      std::cout << "record=value player=" << pi << " value=" << value.to_string() << '\n';
      const auto& seqs = sf.seqs(p);
      const auto& sets = sf.sets(p);
      for (std::size_t i = 1; i < seqs.size(); ++i)
        std::cout << "record=witness player=" << pi << " infoset=" << sets[seqs[i].infoset].name
                  << " action=" << seqs[i].action
                  << " prob=" << tc.witness_plans[seat][i].to_string() << '\n';
      const auto& oseqs = sf.seqs(opponent(p));
      const auto& osets = sf.sets(opponent(p));
      for (std::size_t i = 1; i < oseqs.size(); ++i)
        std::cout << "record=strong-opponent for=" << pi
                  << " infoset=" << osets[oseqs[i].infoset].name
                  << " action=" << oseqs[i].action
                  << " prob=" << tc.strong_opponent_plans[seat][i].to_string() << '\n';
    }
    for (const auto& a : tc.actions) {
      if (!wanted(a.player)) continue;
      std::cout << "record=action player=" << player_index(a.player)
                << " infoset=" << a.infoset << " action=" << a.action
                << " sequence=" << a.sequence
                << " dominated_strict=" << bit(a.dominated_strict)
                << " dominated_weak=" << bit(a.dominated_weak)
                << " iter_dominated=" << bit(a.iteratively_dominated)
                << " mistake=" << bit(a.mistake)
                << " strong_mistake=" << bit(a.strong_mistake)
                << " unreachable=" << bit(a.unreachable)
                << " max_prob=" << a.max_prob.to_string()
                << " strong_max_prob=" << a.strong_max_prob.to_string() << '\n';
    }
    for (std::size_t r = 0; r < elim.rounds.size(); ++r)
      for (const auto& d : elim.rounds[r])
        std::cout << "record=elimination mode=" << opt.mode << " round=" << r + 1
                  << " player=" << player_index(d.player) << " infoset=" << d.infoset
                  << " action=" << d.action << " dominated_by=" << d.dominated_by << '\n';
    return;
  }

  std::ostringstream text;
  for (Player p : opt.seats()) {
    const int pi = player_index(p);
    const Rational value = p == Player::one ? tc.game_value : -tc.game_value;
    text << "game value (player " << pi << "): " << fmt(value) << '\n';
    text << "witness plan (player " << pi << "), realization probability by sequence:\n";
    const auto& seqs = sf.seqs(p);
    const auto& sets = sf.sets(p);
    std::vector<std::vector<std::string>> wrows;
    for (std::size_t i = 1; i < seqs.size(); ++i)
      wrows.push_back({seqs[i].action + "@" + sets[seqs[i].infoset].name,
                       fmt(tc.witness_plans[pi - 1][i])});
    text << align_rows(wrows);
  }
  text << "actions:\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"player",  "infoset",     "action",     "strict-dom",
                                   "weak-dom", "iter-dom",   "mistake",    "max-prob"};
  if (opt.strong) {
    head.push_back("strong-mistake");
    head.push_back("strong-max-prob");
  }
  head.push_back("unreachable");
  rows.push_back(head);
  for (const auto& a : tc.actions) {
    if (!wanted(a.player)) continue;
    std::vector<std::string> row = {std::to_string(player_index(a.player)),
                                    a.infoset,
                                    a.action,
                                    yn(a.dominated_strict),
                                    yn(a.dominated_weak),
                                    yn(a.iteratively_dominated),
                                    yn(a.mistake),
                                    fmt(a.max_prob)};
    if (opt.strong) {
      row.push_back(yn(a.strong_mistake));
      row.push_back(fmt(a.strong_max_prob));
    }
    row.push_back(yn(a.unreachable));
    rows.push_back(std::move(row));
  }
  text << align_rows(rows);
  if (opt.strong)
    text << "strong verdicts use the uniform behavioral plan of the opponent\n";
  std::size_t removals = 0;
  for (const auto& round : elim.rounds) removals += round.size();
  text << "iterated elimination (" << opt.mode << "): " << removals
       << (removals == 1 ? " removal" : " removals");
  text << (elim.rounds.empty() ? "\n" : " in " + std::to_string(elim.rounds.size()) +
                                            (elim.rounds.size() == 1 ? " round\n" : " rounds\n"));
  for (std::size_t r = 0; r < elim.rounds.size(); ++r)
    for (const auto& d : elim.rounds[r])
      text << "  round " << r + 1 << ": player " << player_index(d.player) << " removes "
           << d.action << "@" << d.infoset << " (dominated by " << d.dominated_by << ")\n";
  std::cout << text.str();
}

// ---------------------------------------------------------------------------
// experiment + generator subcommands
// ---------------------------------------------------------------------------

void run_table1_cmd(const Options& opt) {
  if (opt.m < 1) throw std::invalid_argument("--m must be at least 1");
  if (opt.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  Table1Row row = run_table1(static_cast<std::size_t>(opt.m),
                             static_cast<std::size_t>(opt.trials), opt.seed, opt.threads);
  if (opt.records())
    std::cout << table1_records({row});
  else
    std::cout << format_table1({row}, opt.decimal < 0 ? 4 : opt.decimal);
}

void run_table2_cmd(const Options& opt) {
  std::vector<int> ns = opt.n_values.empty() ? std::vector<int>{4, 5, 10, 20, 30}
                                             : opt.n_values;
  auto rows = run_table2(ns, opt.threads);
  if (opt.records())
    std::cout << table2_records(rows);
  else
    std::cout << format_table2(rows);
}

void run_kuhn_cmd(const Options& opt) {
  if (opt.n_values.size() != 1)
    throw std::invalid_argument("kuhn needs exactly one deck size, e.g. --n 4");
  std::cout << write_game_tree(kuhn(opt.n_values.front()));
}

void run_rpsq_cmd() { write_matrix_game(std::cout, rpsq()); }

void run_random_cmd(const Options& opt) {
  if (opt.m < 1) throw std::invalid_argument("--m must be at least 1");
  write_matrix_game(std::cout, random_matrix_game(static_cast<std::size_t>(opt.m),
                                                  static_cast<std::size_t>(opt.m), opt.seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of two-player zero-sum games: values, dominance, and\n"
      "mistake / strong-mistake detection via rational linear programming."};
  app.require_subcommand(1);
  Options opt;

  CLI::App* solve = app.add_subcommand(
      "solve", "Game value and one optimal strategy for the chosen player");
  add_input_group(solve, opt);
  solve->add_option("--player", opt.player, "Seat to solve for (default 1)")
      ->check(CLI::IsMember({1, 2}));
  add_output_flags(solve, opt);

  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "Per-strategy (matrix) or per-action (tree) dominance and mistake report");
  add_input_group(analyze, opt);
  analyze->add_option("--player", opt.player, "Restrict the report to one seat")
      ->check(CLI::IsMember({1, 2}));
  analyze->add_option("--mode", opt.mode, "Dominance mode for the elimination trace")
      ->check(CLI::IsMember({"strict", "weak"}));
  analyze->add_flag("--strong", opt.strong,
                    "Show the strong-mistake columns in the text report");
  analyze->add_option("--threads", opt.threads,
                      "Worker threads for the per-action sweeps (trees)")
      ->check(CLI::Range(1, 512));
  add_output_flags(analyze, opt);

  CLI::App* kuhn_cmd = app.add_subcommand(
      "kuhn", "Print the n-card one-round poker tree in the tree file format");
  kuhn_cmd->add_option("--n", opt.n_values, "Deck size")->required()->delimiter(',');

  CLI::App* rpsq_cmd = app.add_subcommand(
      "rpsq", "Print the rock-paper-scissors-quit matrix in the matrix file format");

  CLI::App* random_cmd = app.add_subcommand(
      "random", "Print a seeded random m x m matrix game with payoffs in [-1, 1]");
  random_cmd->add_option("--m", opt.m, "Number of strategies per player")->required();
  random_cmd->add_option("--seed", opt.seed, "Random seed (default 1)");

  CLI::App* table1 = app.add_subcommand(
      "table1", "Random-game experiment: average dominated / eliminated / mistake counts");
  table1->add_option("--m", opt.m, "Strategies per player (default 3)");
  table1->add_option("--trials", opt.trials, "Number of sampled games (default 1000)");
  table1->add_option("--seed", opt.seed, "Random seed (default 1)");
  table1->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 512));
  add_output_flags(table1, opt);

  CLI::App* table2 = app.add_subcommand(
      "table2", "Kuhn-poker experiment: dominated actions and mistakes per deck size");
  table2->add_option("--n", opt.n_values, "Deck sizes (default 4,5,10,20,30)")
      ->delimiter(',');
  table2->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 512));
  add_output_flags(table2, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) run_solve(opt);
    else if (analyze->parsed()) {
      if (!opt.matrix_path.empty()) analyze_matrix(opt);
      else analyze_tree(opt);
    } else if (kuhn_cmd->parsed()) run_kuhn_cmd(opt);
    else if (rpsq_cmd->parsed()) run_rpsq_cmd();
    else if (random_cmd->parsed()) run_random_cmd(opt);
    else if (table1->parsed()) run_table1_cmd(opt);
    else if (table2->parsed()) run_table2_cmd(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
