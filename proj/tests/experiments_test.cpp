#include <string>
#include <vector>

#include "doctest.h"
#include "zsum/experiments.hpp"

using namespace zsum;

namespace {

bool rows_equal(const Table1Row& a, const Table1Row& b) {
  return a.m == b.m && a.trials == b.trials && a.avg_sds == b.avg_sds &&
         a.avg_wds == b.avg_wds && a.avg_iter_sds == b.avg_iter_sds &&
         a.avg_iter_wds == b.avg_iter_wds && a.avg_mistakes == b.avg_mistakes &&
         a.trials_wds_equals_sds == b.trials_wds_equals_sds &&
         a.trials_with_dominated == b.trials_with_dominated;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("random-game experiment is deterministic and internally consistent") {
  Table1Row row = run_table1(3, 40, 20240901);
  CHECK(row.m == 3);
  CHECK(row.trials == 40);

  // Same seed, same numbers; a different seed moves them.
  CHECK(rows_equal(row, run_table1(3, 40, 20240901)));
  CHECK(!rows_equal(row, run_table1(3, 40, 20240902)));

  // Thread fan-out must not change the fold.
  CHECK(rows_equal(row, run_table1(3, 40, 20240901, 4)));

  // Per-trial counts obey: strict <= weak, strict <= iterated strict,
  // strict-dominated strategies are mistakes, and nothing exceeds m.
  CHECK(row.avg_sds <= row.avg_wds);
  CHECK(row.avg_sds <= row.avg_iter_sds);
  CHECK(row.avg_wds <= row.avg_iter_wds);
  CHECK(row.avg_sds <= row.avg_mistakes);
  CHECK(row.avg_mistakes <= Rational(3));
  CHECK(row.avg_sds >= Rational(0));

  // Continuous payoffs: weak and strict dominance coincide almost surely,
  // and with m=3 a dominated strategy appears in over half the trials.
  CHECK(row.trials_wds_equals_sds == 40);
  CHECK(row.trials_with_dominated >= 10);
  CHECK(row.trials_with_dominated <= 40);
}

TEST_CASE("prefixes of the trial stream agree") {
  // Growing the trial count must not change earlier trials' contribution:
  // 10-trial totals are a prefix of 20-trial totals (exact averages scale).
  Table1Row ten = run_table1(2, 10, 77);
  Table1Row twenty = run_table1(2, 20, 77);
  // avg * trials is the exact total; prefix totals cannot exceed the longer run.
  CHECK(ten.avg_mistakes * Rational(10) <= twenty.avg_mistakes * Rational(20));
  CHECK(ten.trials_with_dominated <= twenty.trials_with_dominated);
}

TEST_CASE("kuhn experiment reproduces the known rows") {
  auto rows = run_table2({4, 5});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].dominated_p1 == 2);
  CHECK(rows[0].dominated_p2 == 3);
  CHECK(rows[0].mistakes_p1 == 5);
  CHECK(rows[0].mistakes_p2 == 4);
  CHECK(rows[0].total_actions_p1 == 16);
  CHECK(rows[0].total_actions_p2 == 16);
  CHECK(rows[1].n == 5);
  CHECK(rows[1].mistakes_p1 == 5);
  CHECK(rows[1].mistakes_p2 == 7);
  CHECK(rows[1].total_actions_p1 == 20);
  CHECK_THROWS_AS(run_table2({3}), std::invalid_argument);
}

TEST_CASE("table renderers") {
  Table1Row row = run_table1(2, 4, 5);
  std::string text = format_table1({row});
  CHECK(text.find("m=2 (4)") != std::string::npos);
  CHECK(text.find("mistakes") != std::string::npos);

  Table2Row t2{4, 2, 3, 5, 4, 16, 16};
  std::string text2 = format_table2({t2});
  CHECK(text2.find("n=4") != std::string::npos);

  std::string rec1 = table1_records({row});
  CHECK(rec1.rfind("record=table1 m=2 trials=4 ", 0) == 0);
  std::string rec2 = table2_records({t2});
  CHECK(rec2 ==
        "record=table2 n=4 dominated_p1=2 dominated_p2=3 mistakes_p1=5 mistakes_p2=4 "
        "total_actions_p1=16 total_actions_p2=16\n");
}

}  // TEST_SUITE
