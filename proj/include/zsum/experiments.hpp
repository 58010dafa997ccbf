#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zsum/rational.hpp"

namespace zsum {

// Random-game experiment: average number of player-1 strategies that are
// pure-strategy dominated (strict/weak), removed by iterated elimination
// (strict/weak mode), and mistakes, over seeded random m x m games with
// payoffs uniform on [-1, 1]. Averages are exact rationals.
struct Table1Row {
  std::size_t m = 0;
  std::size_t trials = 0;
  Rational avg_sds;        // strictly dominated strategies
  Rational avg_wds;        // weakly dominated strategies
  Rational avg_iter_sds;   // removed by strict-mode iterated elimination
  Rational avg_iter_wds;   // removed by weak-mode iterated elimination
  Rational avg_mistakes;   // strategies with zero probability in every equilibrium
  std::size_t trials_wds_equals_sds = 0;   // trials whose WDS count equals the SDS count
  std::size_t trials_with_dominated = 0;   // trials with at least one weakly dominated strategy
};

// Deterministic for a given seed regardless of the thread count: trial t
// uses the t-th seed of a splitmix64 stream and the counts are folded in
// trial order.
Table1Row run_table1(std::size_t m, std::size_t trials, std::uint64_t seed, int threads = 1);

// Kuhn-poker experiment: per deck size, how many of each player's actions
// are weakly dominated (leaf criterion) and how many are mistakes, out of
// all non-empty sequences.
struct Table2Row {
  int n = 0;
  std::size_t dominated_p1 = 0;
  std::size_t dominated_p2 = 0;
  std::size_t mistakes_p1 = 0;
  std::size_t mistakes_p2 = 0;
  std::size_t total_actions_p1 = 0;
  std::size_t total_actions_p2 = 0;
};

std::vector<Table2Row> run_table2(const std::vector<int>& n_values, int threads = 1);

// Aligned metrics-by-column tables; averages rendered to `decimal_digits`.
std::string format_table1(const std::vector<Table1Row>& rows, int decimal_digits = 4);
std::string format_table2(const std::vector<Table2Row>& rows);

// Machine-readable form: one "record=table1 key=value ..." line per row,
// with exact rationals. The schema is stable.
std::string table1_records(const std::vector<Table1Row>& rows);
std::string table2_records(const std::vector<Table2Row>& rows);

}  // namespace zsum
