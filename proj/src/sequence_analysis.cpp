#include "zsum/sequence_analysis.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "zsum/simplex.hpp"

namespace zsum {

namespace {

int seat_of(Player p) { return p == Player::one ? 0 : 1; }

// The analyzed player's own-seat copy of the sequence form: payoff rows are
// own sequences from the own perspective, (E, e) constrain the own plan and
// (F, f) the opponent's.
struct SeqView {
  std::vector<std::vector<Rational>> payoff;
  const std::vector<std::vector<Rational>>* E;
  const std::vector<Rational>* e;
  const std::vector<std::vector<Rational>>* F;
  const std::vector<Rational>* f;
  std::size_t own_seqs = 0;
  std::size_t opp_seqs = 0;
};

SeqView make_view(const SequenceForm& sf, Player player) {
  SeqView v;
  v.own_seqs = sf.seqs(player).size();
  v.opp_seqs = sf.seqs(opponent(player)).size();
  if (player == Player::one) {
    v.payoff = sf.payoff;
    v.E = &sf.E;
    v.e = &sf.e;
    v.F = &sf.F;
    v.f = &sf.f;
  } else {
    v.payoff.assign(v.own_seqs, std::vector<Rational>(v.opp_seqs, Rational(0)));
    for (std::size_t i = 0; i < v.own_seqs; ++i)
      for (std::size_t j = 0; j < v.opp_seqs; ++j) v.payoff[i][j] = -sf.payoff[j][i];
    v.E = &sf.F;
    v.e = &sf.f;
    v.F = &sf.E;
    v.f = &sf.e;
  }
  return v;
}

// Incremental solver for the staged sequence-form analyses: value solve,
// value pin, per-sequence objective sweeps, optional best-response pin.
class StagedSequenceAnalyzer {
 public:
  explicit StagedSequenceAnalyzer(const SeqView& view)
      : own_(view.own_seqs), qvars_(view.f->size()), solver_(build(view)) {
    if (solver_.solve() != lp::Status::optimal)
      throw std::logic_error("sequence-form value LP failed to solve");
    value_ = solver_.objective_value();
    std::vector<Rational> pin(num_vars(), Rational(0));
    pin[own_] = Rational(1);  // q_0, the guaranteed payoff
    solver_.add_equality(std::move(pin), value_);
  }

  const Rational& value() const { return value_; }

  std::vector<Rational> optimal_plan() {
    lp::Solution sol = solver_.solution();
    return std::vector<Rational>(sol.primal.begin(), sol.primal.begin() + own_);
  }

  // Maximum realization probability of one own sequence over the current
  // (value-pinned, possibly best-response-pinned) optimal face.
  Rational max_probability(std::size_t seq) {
    std::vector<Rational> obj(num_vars(), Rational(0));
    obj[seq] = Rational(1);
    solver_.set_objective(lp::Sense::maximize, std::move(obj));
    if (solver_.solve() != lp::Status::optimal)
      throw std::logic_error("sequence sweep LP failed to solve");
    return solver_.objective_value();
  }

  // Pins the best expected payoff against the given opponent plan; the
  // optimal face shrinks to the best responses among optimal plans.
  Rational pin_best_response(const SeqView& view, const std::vector<Rational>& opp_plan) {
    std::vector<Rational> obj(num_vars(), Rational(0));
    for (std::size_t i = 0; i < own_; ++i) {
      Rational sum(0);
      for (std::size_t j = 0; j < view.opp_seqs; ++j)
        if (!(opp_plan[j] == Rational(0))) sum += view.payoff[i][j] * opp_plan[j];
      obj[i] = std::move(sum);
    }
    std::vector<Rational> pin = obj;
    solver_.set_objective(lp::Sense::maximize, std::move(obj));
    if (solver_.solve() != lp::Status::optimal)
      throw std::logic_error("best-response pin LP failed to solve");
    Rational best = solver_.objective_value();
    solver_.add_equality(std::move(pin), best);
    return best;
  }

 private:
  std::size_t num_vars() const { return own_ + qvars_; }

  static lp::LinearProgram build(const SeqView& view) {
    const std::size_t own = view.own_seqs;
    const std::size_t qvars = view.f->size();  // one per opponent infoset + 1
    lp::LinearProgram prog;
    prog.sense = lp::Sense::maximize;
    prog.objective.assign(own + qvars, Rational(0));
    prog.objective[own] = Rational(1);
    prog.var_kinds.assign(own + qvars, lp::VarKind::nonnegative);
    for (std::size_t r = 0; r < qvars; ++r) prog.var_kinds[own + r] = lp::VarKind::free_var;
    for (std::size_t r = 0; r < view.e->size(); ++r) {
      std::vector<Rational> row(own + qvars, Rational(0));
      for (std::size_t i = 0; i < own; ++i) row[i] = (*view.E)[r][i];
      prog.add_constraint(std::move(row), lp::Relation::eq, (*view.e)[r]);
    }
    for (std::size_t j = 0; j < view.opp_seqs; ++j) {
      std::vector<Rational> row(own + qvars, Rational(0));
      for (std::size_t i = 0; i < own; ++i) row[i] = view.payoff[i][j];
      for (std::size_t r = 0; r < qvars; ++r) row[own + r] = -(*view.F)[r][j];
      prog.add_constraint(std::move(row), lp::Relation::ge, Rational(0));
    }
    return prog;
  }

  std::size_t own_;
  std::size_t qvars_;
  lp::SimplexSolver solver_;
  Rational value_;
};

void check_plan(const SeqView& view, const std::vector<Rational>& plan,
                const std::vector<SequenceForm::Infoset>& opp_sets) {
  if (plan.size() != view.opp_seqs)
    throw std::invalid_argument("opponent plan has " + std::to_string(plan.size()) +
                                " entries, expected " + std::to_string(view.opp_seqs));
  for (const Rational& p : plan)
    if (p < Rational(0)) throw std::invalid_argument("opponent plan has a negative entry");
  for (std::size_t r = 0; r < view.f->size(); ++r) {
    Rational sum(0);
    for (std::size_t j = 0; j < view.opp_seqs; ++j) sum += (*view.F)[r][j] * plan[j];
    if (sum != (*view.f)[r])
      throw std::invalid_argument("opponent plan violates its realization constraints");
  }
  for (const auto& is : opp_sets) {
    if (plan[is.parent_seq] == Rational(0)) continue;  // unreachable under the plan
    for (std::size_t s : is.action_seqs)
      if (plan[s] == Rational(0))
        throw std::invalid_argument("opponent plan is not fully mixed: zero behavioral "
                                    "probability at infoset '" +
                                    is.name + "'");
  }
}

// Runs max_probability for sequences [1, count) on up to `threads` copies of
// the pinned analyzer, writing results by sequence index.
std::vector<Rational> sweep_probabilities(const StagedSequenceAnalyzer& base, std::size_t count,
                                          int threads) {
  std::vector<Rational> out(count, Rational(1));  // index 0: the empty sequence, always 1
  if (count <= 1) return out;
  const std::size_t jobs = count - 1;
  std::size_t workers = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  workers = std::min(workers, jobs);
  if (workers <= 1) {
    StagedSequenceAnalyzer local(base);
    for (std::size_t s = 1; s < count; ++s) out[s] = local.max_probability(s);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        StagedSequenceAnalyzer local(base);
        for (std::size_t s = 1 + w; s < count; s += workers) out[s] = local.max_probability(s);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace

SequenceValue solve_sequence_value(const SequenceForm& sf, Player player) {
  SeqView view = make_view(sf, player);
  StagedSequenceAnalyzer analyzer(view);
  return {analyzer.value(), analyzer.optimal_plan()};
}

std::size_t find_sequence(const SequenceForm& sf, Player player, const std::string& infoset,
                          const std::string& action) {
  for (const auto& is : sf.sets(player)) {
    if (is.name != infoset) continue;
    for (std::size_t a = 0; a < is.actions.size(); ++a)
      if (is.actions[a] == action) return is.action_seqs[a];
    throw std::invalid_argument("information set '" + infoset + "' has no action named '" +
                                action + "'");
  }
  throw std::invalid_argument("player " + std::to_string(player_index(player)) +
                              " has no information set named '" + infoset + "'");
}

MistakeResult is_mistake_action(const SequenceForm& sf, Player player,
                                const std::string& infoset, const std::string& action) {
  const std::size_t seq = find_sequence(sf, player, infoset, action);
  SeqView view = make_view(sf, player);
  StagedSequenceAnalyzer analyzer(view);
  MistakeResult res;
  res.max_prob = analyzer.max_probability(seq);
  res.verdict = res.max_prob == Rational(0);
  return res;
}

std::vector<Rational> uniform_realization_plan(const SequenceForm& sf, Player player) {
  const auto& seqs = sf.seqs(player);
  std::vector<Rational> plan(seqs.size(), Rational(0));
  plan[0] = Rational(1);
  for (const auto& is : sf.sets(player)) {
    const Rational share(1, static_cast<long>(is.action_seqs.size()));
    for (std::size_t s : is.action_seqs) plan[s] = plan[is.parent_seq] * share;
  }
  return plan;
}

MistakeResult is_strong_mistake_action(const SequenceForm& sf, Player player,
                                       const std::string& infoset, const std::string& action) {
  return is_strong_mistake_action(sf, player, infoset, action,
                                  uniform_realization_plan(sf, opponent(player)));
}

MistakeResult is_strong_mistake_action(const SequenceForm& sf, Player player,
                                       const std::string& infoset, const std::string& action,
                                       const std::vector<Rational>& fully_mixed_plan) {
  const std::size_t seq = find_sequence(sf, player, infoset, action);
  SeqView view = make_view(sf, player);
  check_plan(view, fully_mixed_plan, sf.sets(opponent(player)));
  StagedSequenceAnalyzer analyzer(view);
  analyzer.pin_best_response(view, fully_mixed_plan);
  MistakeResult res;
  res.max_prob = analyzer.max_probability(seq);
  res.verdict = res.max_prob == Rational(0);
  return res;
}

TreeClassification classify_all_actions(const GameTree& t, const ClassifyOptions& options) {
  SequenceForm sf = to_sequence_form(t);
  TreeClassification out;

  std::vector<DominatedAction> strict = dominated_actions(t, DominanceMode::strict);
  std::vector<DominatedAction> weak = dominated_actions(t, DominanceMode::weak);
  ActionEliminationResult iterated = iterated_action_elimination(t, DominanceMode::weak);

  auto matches = [](const DominatedAction& d, const ActionClassification& a) {
    return d.player == a.player && d.infoset == a.infoset && d.action == a.action;
  };

  std::array<std::vector<Rational>, 2> probs, strong_probs;
  std::array<Rational, 2> values;
  for (int seat = 0; seat < 2; ++seat) {
    const Player player = seat == 0 ? Player::one : Player::two;
    SeqView view = make_view(sf, player);
    StagedSequenceAnalyzer analyzer(view);
    values[seat] = analyzer.value();
    out.witness_plans[seat] = analyzer.optimal_plan();
    probs[seat] = sweep_probabilities(analyzer, view.own_seqs, options.threads);
    std::vector<Rational> opp_plan = uniform_realization_plan(sf, opponent(player));
    analyzer.pin_best_response(view, opp_plan);
    out.strong_opponent_plans[seat] = std::move(opp_plan);
    strong_probs[seat] = sweep_probabilities(analyzer, view.own_seqs, options.threads);
  }
  out.game_value = values[0];

  for (int seat = 0; seat < 2; ++seat) {
    const Player player = seat == 0 ? Player::one : Player::two;
    const auto& seqs = sf.sequences[seat];
    const auto& sets = sf.infosets[seat];
    for (std::size_t s = 1; s < seqs.size(); ++s) {
      ActionClassification row;
      row.player = player;
      row.infoset = sets[seqs[s].infoset].name;
      row.action = seqs[s].action;
      row.sequence = s;
      row.max_prob = probs[seat][s];
      row.strong_max_prob = strong_probs[seat][s];
      row.mistake = row.max_prob == Rational(0);
      row.strong_mistake = row.strong_max_prob == Rational(0);
      const std::size_t parent = sets[seqs[s].infoset].parent_seq;
      row.unreachable = parent != 0 && probs[seat][parent] == Rational(0);
      for (const auto& d : strict)
        if (matches(d, row)) row.dominated_strict = true;
      for (const auto& d : weak)
        if (matches(d, row)) row.dominated_weak = true;
      for (const auto& round : iterated.rounds)
        for (const auto& d : round)
          if (matches(d, row)) row.iteratively_dominated = true;
      out.actions.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace zsum
