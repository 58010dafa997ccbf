#include "zsum/experiments.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zsum/game_zoo.hpp"
#include "zsum/sequence_analysis.hpp"
#include "zsum/strategic_analysis.hpp"

namespace zsum {

namespace {

struct TrialCounts {
  std::size_t sds = 0, wds = 0, iter_sds = 0, iter_wds = 0, mistakes = 0;
};

TrialCounts run_trial(std::size_t m, std::uint64_t seed) {
  const MatrixGame g = random_matrix_game(m, m, seed);
  TrialCounts c;
  for (std::size_t k = 0; k < m; ++k) {
    PureDominance dom = dominance_pure(g, Player::one, k);
    if (!dom.strict_by.empty()) ++c.sds;
    if (!dom.weak_by.empty()) ++c.wds;
  }
  for (const EliminationStep& step : iterated_elimination(g, DominanceMode::strict).trace)
    if (step.player == Player::one) ++c.iter_sds;
  for (const EliminationStep& step : iterated_elimination(g, DominanceMode::weak).trace)
    if (step.player == Player::one) ++c.iter_wds;
  for (const Rational& p : mistake_probabilities(g, Player::one))
    if (p == Rational(0)) ++c.mistakes;
  return c;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_metric_table(const std::vector<std::string>& headers,
                                const std::vector<std::pair<std::string, std::vector<std::string>>>&
                                    metrics) {
  std::size_t label_width = 0;
  for (const auto& [label, cells] : metrics) label_width = std::max(label_width, label.size());
  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& [label, cells] : metrics)
      widths[c] = std::max(widths[c], cells[c].size());
  }
  std::ostringstream out;
  out << pad_right("", label_width);
  for (std::size_t c = 0; c < headers.size(); ++c) out << "  " << pad_left(headers[c], widths[c]);
  out << '\n';
  for (const auto& [label, cells] : metrics) {
    out << pad_right(label, label_width);
    for (std::size_t c = 0; c < cells.size(); ++c) out << "  " << pad_left(cells[c], widths[c]);
    out << '\n';
  }
  return out.str();
}

}  // namespace

Table1Row run_table1(std::size_t m, std::size_t trials, std::uint64_t seed, int threads) {
  if (m < 2) throw std::invalid_argument("run_table1 needs games of size at least 2");
  if (trials < 1) throw std::invalid_argument("run_table1 needs at least one trial");

  std::vector<std::uint64_t> trial_seeds(trials);
  std::uint64_t state = seed;
  for (std::size_t t = 0; t < trials; ++t) trial_seeds[t] = splitmix64(state);

  std::vector<TrialCounts> counts(trials);
  std::size_t workers = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  workers = std::min(workers, trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) counts[t] = run_trial(m, trial_seeds[t]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (std::size_t t = w; t < trials; t += workers)
            counts[t] = run_trial(m, trial_seeds[t]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  Table1Row row;
  row.m = m;
  row.trials = trials;
  std::size_t sds = 0, wds = 0, iter_sds = 0, iter_wds = 0, mistakes = 0;
  for (const TrialCounts& c : counts) {
    sds += c.sds;
    wds += c.wds;
    iter_sds += c.iter_sds;
    iter_wds += c.iter_wds;
    mistakes += c.mistakes;
    if (c.wds == c.sds) ++row.trials_wds_equals_sds;
    if (c.wds > 0) ++row.trials_with_dominated;
  }
  const Rational denom(static_cast<long>(trials));
  row.avg_sds = Rational(static_cast<long>(sds)) / denom;
  row.avg_wds = Rational(static_cast<long>(wds)) / denom;
  row.avg_iter_sds = Rational(static_cast<long>(iter_sds)) / denom;
  row.avg_iter_wds = Rational(static_cast<long>(iter_wds)) / denom;
  row.avg_mistakes = Rational(static_cast<long>(mistakes)) / denom;
  return row;
}

std::vector<Table2Row> run_table2(const std::vector<int>& n_values, int threads) {
  std::vector<Table2Row> rows;
  for (int n : n_values) {
    if (n <= 3)
      throw std::invalid_argument("run_table2 needs deck sizes above 3, got " +
                                  std::to_string(n));
    const GameTree t = kuhn(n);
    ClassifyOptions options;
    options.threads = threads;
    const TreeClassification table = classify_all_actions(t, options);
    Table2Row row;
    row.n = n;
    for (const ActionClassification& a : table.actions) {
      const bool p1 = a.player == Player::one;
      if (a.dominated_weak) ++(p1 ? row.dominated_p1 : row.dominated_p2);
      if (a.mistake) ++(p1 ? row.mistakes_p1 : row.mistakes_p2);
      ++(p1 ? row.total_actions_p1 : row.total_actions_p2);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_table1(const std::vector<Table1Row>& rows, int decimal_digits) {
  std::vector<std::string> headers;
  for (const Table1Row& r : rows)
    headers.push_back("m=" + std::to_string(r.m) + " (" + std::to_string(r.trials) + ")");
  auto cells = [&](const Rational Table1Row::*field) {
    std::vector<std::string> out;
    for (const Table1Row& r : rows) out.push_back((r.*field).to_decimal(decimal_digits));
    return out;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> metrics = {
      {"avg # strictly dominated", cells(&Table1Row::avg_sds)},
      {"avg # weakly dominated", cells(&Table1Row::avg_wds)},
      {"avg # iter. strictly dominated", cells(&Table1Row::avg_iter_sds)},
      {"avg # iter. weakly dominated", cells(&Table1Row::avg_iter_wds)},
      {"avg # mistakes", cells(&Table1Row::avg_mistakes)},
  };
  return render_metric_table(headers, metrics);
}

std::string format_table2(const std::vector<Table2Row>& rows) {
  std::vector<std::string> headers;
  for (const Table2Row& r : rows) headers.push_back("n=" + std::to_string(r.n));
  auto cells = [&](const std::size_t Table2Row::*field) {
    std::vector<std::string> out;
    for (const Table2Row& r : rows) out.push_back(std::to_string(r.*field));
    return out;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> metrics = {
      {"dominated actions P1", cells(&Table2Row::dominated_p1)},
      {"dominated actions P2", cells(&Table2Row::dominated_p2)},
      {"mistakes P1", cells(&Table2Row::mistakes_p1)},
      {"mistakes P2", cells(&Table2Row::mistakes_p2)},
      {"total actions P1", cells(&Table2Row::total_actions_p1)},
      {"total actions P2", cells(&Table2Row::total_actions_p2)},
  };
  return render_metric_table(headers, metrics);
}

std::string table1_records(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  for (const Table1Row& r : rows) {
    out << "record=table1 m=" << r.m << " trials=" << r.trials
        << " avg_sds=" << r.avg_sds.to_string() << " avg_wds=" << r.avg_wds.to_string()
        << " avg_iter_sds=" << r.avg_iter_sds.to_string()
        << " avg_iter_wds=" << r.avg_iter_wds.to_string()
        << " avg_mistakes=" << r.avg_mistakes.to_string()
        << " trials_wds_equals_sds=" << r.trials_wds_equals_sds
        << " trials_with_dominated=" << r.trials_with_dominated << '\n';
  }
  return out.str();
}

std::string table2_records(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  for (const Table2Row& r : rows) {
    out << "record=table2 n=" << r.n << " dominated_p1=" << r.dominated_p1
        << " dominated_p2=" << r.dominated_p2 << " mistakes_p1=" << r.mistakes_p1
        << " mistakes_p2=" << r.mistakes_p2 << " total_actions_p1=" << r.total_actions_p1
        << " total_actions_p2=" << r.total_actions_p2 << '\n';
  }
  return out.str();
}

}  // namespace zsum
