#include "zsum/strategic_analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "zsum/simplex.hpp"

namespace zsum {

namespace {

void check_game(const MatrixGame& g) {
  if (g.rows() == 0 || g.cols() == 0)
    throw std::invalid_argument("matrix game must have at least one row and one column");
  for (const auto& row : g.payoffs)
    if (row.size() != g.cols()) throw std::invalid_argument("matrix game is ragged");
}

// Rotates the game so the analyzed player is always the row maximizer.
MatrixGame player_view(const MatrixGame& g, Player player) {
  check_game(g);
  return player == Player::one ? g : negated_transpose(g);
}

void check_index(const MatrixGame& view, std::size_t k) {
  if (k >= view.rows()) throw std::out_of_range("strategy index out of range");
}

std::vector<Rational> uniform_mix(std::size_t n) {
  return std::vector<Rational>(n, Rational(1, static_cast<long>(n)));
}

void check_fully_mixed(const std::vector<Rational>& mix, std::size_t n) {
  if (mix.size() != n)
    throw std::invalid_argument("fully mixed strategy length does not match opponent");
  Rational sum(0);
  for (const auto& p : mix) {
    if (p.sign() <= 0)
      throw std::invalid_argument("fully mixed strategy requires strictly positive entries");
    sum += p;
  }
  if (sum != Rational(1)) throw std::invalid_argument("fully mixed strategy must sum to 1");
}

// Maximin LP for the row player of `view`: variables (x_1..x_m, v), v free;
// maximize v subject to x'A >= v in every column and x on the simplex.
lp::LinearProgram value_lp(const MatrixGame& view) {
  const std::size_t m = view.rows(), n = view.cols();
  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  prog.objective.assign(m + 1, Rational(0));
  prog.objective[m] = Rational(1);
  prog.var_kinds.assign(m + 1, lp::VarKind::nonnegative);
  prog.var_kinds[m] = lp::VarKind::free_var;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = view.payoffs[i][j];
    row[m] = Rational(-1);
    prog.add_constraint(std::move(row), lp::Relation::ge, Rational(0));
  }
  std::vector<Rational> ones(m + 1, Rational(1));
  ones[m] = Rational(0);
  prog.add_constraint(std::move(ones), lp::Relation::eq, Rational(1));
  return prog;
}

void require_optimal(lp::Status s) {
  if (s != lp::Status::optimal)
    throw std::logic_error("zero-sum game LP must be feasible and bounded");
}

// One value-LP solve shared by any number of follow-up objectives: pin the
// game value, optionally pin the payoff against a fully mixed opponent, then
// maximize per-strategy weights over the remaining equilibrium face.
class StagedAnalyzer {
 public:
  explicit StagedAnalyzer(const MatrixGame& view)
      : m_(view.rows()), solver_(value_lp(view)) {
    require_optimal(solver_.solve());
    lp::Solution sol = solver_.solution();
    value_ = sol.objective_value;
    witness_.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(m_));
    std::vector<Rational> pin(m_ + 1, Rational(0));
    pin[m_] = Rational(1);
    solver_.add_equality(std::move(pin), value_);
  }

  const Rational& value() const { return value_; }
  const std::vector<Rational>& witness() const { return witness_; }

  Rational max_probability(std::size_t k) {
    std::vector<Rational> obj(m_ + 1, Rational(0));
    obj[k] = Rational(1);
    solver_.set_objective(lp::Sense::maximize, std::move(obj));
    require_optimal(solver_.solve());
    return solver_.objective_value();
  }

  // Maximizes the expected payoff against `mix` over the current face, pins
  // it there, and returns the pinned payoff.
  Rational pin_best_response(const MatrixGame& view, const std::vector<Rational>& mix) {
    std::vector<Rational> obj(m_ + 1, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rational acc(0);
      for (std::size_t j = 0; j < view.cols(); ++j)
        if (!view.payoffs[i][j].is_zero()) acc += view.payoffs[i][j] * mix[j];
      obj[i] = acc;
    }
    solver_.set_objective(lp::Sense::maximize, obj);
    require_optimal(solver_.solve());
    Rational best = solver_.objective_value();
    solver_.add_equality(std::move(obj), best);
    return best;
  }

 private:
  std::size_t m_;
  lp::SimplexSolver solver_;
  Rational value_;
  std::vector<Rational> witness_;
};

PureDominance pure_dominance_view(const MatrixGame& view, std::size_t k) {
  PureDominance out;
  for (std::size_t r = 0; r < view.rows(); ++r) {
    if (r == k) continue;
    bool ge_all = true, gt_all = true, gt_some = false;
    for (std::size_t j = 0; j < view.cols(); ++j) {
      const Rational& a = view.payoffs[r][j];
      const Rational& b = view.payoffs[k][j];
      if (a < b) {
        ge_all = gt_all = false;
        break;
      }
      if (a == b) gt_all = false;
      else gt_some = true;
    }
    if (gt_all) out.strict_by.push_back(r);
    if (ge_all && gt_some) out.weak_by.push_back(r);
  }
  return out;
}

MixedDominance mixed_dominance_view(const MatrixGame& view, std::size_t k, DominanceMode mode) {
  const std::size_t m = view.rows(), n = view.cols();
  MixedDominance out;
  if (m < 2) return out;

  // variables: weights over the other rows (+ the margin variable in strict mode)
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < m; ++i)
    if (i != k) others.push_back(i);
  const std::size_t w = others.size();

  lp::LinearProgram prog;
  prog.sense = lp::Sense::maximize;
  const bool strict = mode == DominanceMode::strict;
  const std::size_t nvars = strict ? w + 1 : w;
  prog.objective.assign(nvars, Rational(0));
  prog.var_kinds.assign(nvars, lp::VarKind::nonnegative);
  if (strict) {
    prog.objective[w] = Rational(1);
    prog.var_kinds[w] = lp::VarKind::free_var;
  }

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t t = 0; t < w; ++t)
      row[t] = view.payoffs[others[t]][j] - view.payoffs[k][j];
    if (strict) {
      row[w] = Rational(-1);
    } else {
      for (std::size_t t = 0; t < w; ++t) prog.objective[t] += row[t];
    }
    prog.add_constraint(std::move(row), lp::Relation::ge, Rational(0));
  }
  std::vector<Rational> ones(nvars, Rational(1));
  if (strict) ones[w] = Rational(0);
  prog.add_constraint(std::move(ones), lp::Relation::eq, Rational(1));

  lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal) return out;  // weak mode can be infeasible
  if (sol.objective_value.sign() <= 0) return out;

  out.dominated = true;
  std::vector<Rational> mixture(m, Rational(0));
  for (std::size_t t = 0; t < w; ++t) mixture[others[t]] = sol.primal[t];
  out.dominator = std::move(mixture);
  return out;
}

// Lowest-index strategy of the seat's current view that is dominated by some
// other current strategy, together with its lowest-index dominator.
std::optional<std::pair<std::size_t, std::size_t>> first_dominated(const MatrixGame& view,
                                                                   DominanceMode mode) {
  for (std::size_t k = 0; k < view.rows(); ++k) {
    PureDominance d = pure_dominance_view(view, k);
    const auto& by = mode == DominanceMode::strict ? d.strict_by : d.weak_by;
    if (!by.empty()) return std::make_pair(k, by.front());
  }
  return std::nullopt;
}

MatrixGame subgame(const MatrixGame& g, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  MatrixGame out;
  out.payoffs.reserve(rows.size());
  for (std::size_t i : rows) {
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (std::size_t j : cols) row.push_back(g.payoffs[i][j]);
    out.payoffs.push_back(std::move(row));
  }
  return out;
}

}  // namespace

ValueSolution solve_value(const MatrixGame& g, Player player) {
  MatrixGame view = player_view(g, player);
  lp::Solution sol = lp::solve(value_lp(view));
  require_optimal(sol.status);
  ValueSolution out;
  out.value = sol.objective_value;
  out.strategy.assign(sol.primal.begin(),
                      sol.primal.begin() + static_cast<std::ptrdiff_t>(view.rows()));
  return out;
}

MistakeResult is_mistake(const MatrixGame& g, Player player, std::size_t k) {
  MatrixGame view = player_view(g, player);
  check_index(view, k);
  StagedAnalyzer analyzer(view);
  Rational prob = analyzer.max_probability(k);
  return {prob.is_zero(), prob};
}

MistakeResult is_strong_mistake(const MatrixGame& g, Player player, std::size_t k) {
  MatrixGame view = player_view(g, player);
  check_index(view, k);
  return is_strong_mistake(g, player, k, uniform_mix(view.cols()));
}

MistakeResult is_strong_mistake(const MatrixGame& g, Player player, std::size_t k,
                                const std::vector<Rational>& fully_mixed_opponent) {
  MatrixGame view = player_view(g, player);
  check_index(view, k);
  check_fully_mixed(fully_mixed_opponent, view.cols());
  StagedAnalyzer analyzer(view);
  analyzer.pin_best_response(view, fully_mixed_opponent);
  Rational prob = analyzer.max_probability(k);
  return {prob.is_zero(), prob};
}

std::vector<Rational> mistake_probabilities(const MatrixGame& g, Player player) {
  MatrixGame view = player_view(g, player);
  StagedAnalyzer analyzer(view);
  std::vector<Rational> out(view.rows());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = analyzer.max_probability(k);
  return out;
}

std::vector<Rational> strong_mistake_probabilities(const MatrixGame& g, Player player) {
  MatrixGame view = player_view(g, player);
  return strong_mistake_probabilities(g, player, uniform_mix(view.cols()));
}

std::vector<Rational> strong_mistake_probabilities(
    const MatrixGame& g, Player player, const std::vector<Rational>& fully_mixed_opponent) {
  MatrixGame view = player_view(g, player);
  check_fully_mixed(fully_mixed_opponent, view.cols());
  StagedAnalyzer analyzer(view);
  analyzer.pin_best_response(view, fully_mixed_opponent);
  std::vector<Rational> out(view.rows());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = analyzer.max_probability(k);
  return out;
}

PureDominance dominance_pure(const MatrixGame& g, Player player, std::size_t k) {
  MatrixGame view = player_view(g, player);
  check_index(view, k);
  return pure_dominance_view(view, k);
}

MixedDominance dominance_mixed(const MatrixGame& g, Player player, std::size_t k,
                               DominanceMode mode) {
  MatrixGame view = player_view(g, player);
  check_index(view, k);
  return mixed_dominance_view(view, k, mode);
}

EliminationResult iterated_elimination(const MatrixGame& g, DominanceMode mode) {
  check_game(g);
  EliminationResult out;
  std::vector<std::size_t> rows(g.rows()), cols(g.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;

  for (std::size_t round = 1;; ++round) {
    bool removed = false;
    for (Player seat : {Player::one, Player::two}) {
      MatrixGame current = subgame(g, rows, cols);
      MatrixGame view = seat == Player::one ? current : negated_transpose(current);
      auto hit = first_dominated(view, mode);
      if (!hit) continue;
      auto& mine = seat == Player::one ? rows : cols;
      out.trace.push_back({seat, mine[hit->first], mine[hit->second], round});
      mine.erase(mine.begin() + static_cast<std::ptrdiff_t>(hit->first));
      removed = true;
    }
    if (!removed) break;
  }
  out.surviving_rows = std::move(rows);
  out.surviving_cols = std::move(cols);
  return out;
}

MatrixGame remove_strategies(const MatrixGame& g, Player player,
                             std::vector<std::size_t> indices) {
  check_game(g);
  const std::size_t count = g.strategies(player);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (std::size_t idx : indices)
    if (idx >= count) throw std::invalid_argument("strategy index out of range");
  if (indices.size() >= count)
    throw std::invalid_argument("cannot remove every strategy of a player");

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < count; ++i)
    if (!std::binary_search(indices.begin(), indices.end(), i)) keep.push_back(i);

  std::vector<std::size_t> all_rows(g.rows()), all_cols(g.cols());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
  return player == Player::one ? subgame(g, keep, all_cols) : subgame(g, all_rows, keep);
}

GameClassification classify_strategies(const MatrixGame& g, Player player) {
  MatrixGame view = player_view(g, player);
  return classify_strategies(g, player, uniform_mix(view.cols()));
}

GameClassification classify_strategies(const MatrixGame& g, Player player,
                                       const std::vector<Rational>& fully_mixed_opponent) {
  MatrixGame view = player_view(g, player);
  const std::size_t m = view.rows();
  check_fully_mixed(fully_mixed_opponent, view.cols());

  GameClassification out;
  out.strategies.resize(m);

  StagedAnalyzer analyzer(view);
  out.game_value = analyzer.value();
  out.witness_equilibrium = analyzer.witness();
  for (std::size_t k = 0; k < m; ++k) {
    StrategyClassification& s = out.strategies[k];
    s.max_prob = analyzer.max_probability(k);
    s.mistake = s.max_prob.is_zero();
  }
  analyzer.pin_best_response(view, fully_mixed_opponent);
  for (std::size_t k = 0; k < m; ++k) {
    StrategyClassification& s = out.strategies[k];
    s.strong_max_prob = analyzer.max_probability(k);
    s.strong_mistake = s.strong_max_prob.is_zero();
  }

  for (std::size_t k = 0; k < m; ++k) {
    PureDominance d = pure_dominance_view(view, k);
    out.strategies[k].strictly_dominated = !d.strict_by.empty();
    out.strategies[k].weakly_dominated = !d.weak_by.empty();
    out.strategies[k].mixed_dominated =
        mixed_dominance_view(view, k, DominanceMode::strict).dominated;
  }

  for (DominanceMode mode : {DominanceMode::strict, DominanceMode::weak}) {
    EliminationResult elim = iterated_elimination(g, mode);
    for (const EliminationStep& step : elim.trace) {
      if (step.player != player) continue;
      if (mode == DominanceMode::strict)
        out.strategies[step.index].iteratively_strictly_dominated = true;
      else
        out.strategies[step.index].iteratively_weakly_dominated = true;
    }
  }
  return out;
}

}  // namespace zsum
