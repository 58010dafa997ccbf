#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zsum/rational.hpp"

namespace zsum::lp {

enum class Sense { maximize, minimize };
enum class Relation { le, eq, ge };
enum class VarKind { nonnegative, free_var };
enum class Status { optimal, infeasible, unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  // Empty means every variable is nonnegative.
  std::vector<VarKind> var_kinds;

  std::size_t num_vars() const { return objective.size(); }

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  VarKind kind(std::size_t j) const {
    return var_kinds.empty() ? VarKind::nonnegative : var_kinds[j];
  }
};

// Duals follow the standard conventions for the program as stated.
// For a maximization: le rows have dual >= 0, ge rows dual <= 0, eq rows free,
// and for every nonnegative variable j, sum_i dual_i * a_ij >= c_j (equality
// for free variables). For a minimization the inequalities mirror. Optimality
// certificate = primal feasibility + dual feasibility + complementary
// slackness + equal objective values, all exact.
struct Solution {
  Status status = Status::infeasible;
  std::vector<Rational> primal;
  Rational objective_value;
  std::vector<Rational> dual;
};

// Solves an LP with a two-phase primal simplex using Bland's rule
// (termination guaranteed on degenerate programs). All arithmetic is exact.
Solution solve(const LinearProgram& lp);

// Returns human-readable descriptions of every certificate violation, or an
// empty list when (lp, sol) form an exact optimal pair. Checks nothing unless
// sol.status == optimal.
std::vector<std::string> certificate_violations(const LinearProgram& lp, const Solution& sol);

// Process-wide counters for post-hoc auditing: every optimal solve is
// verified internally against the original constraint data before the
// solution is handed out.
struct CertificateStats {
  std::uint64_t optimal_solves = 0;
  std::uint64_t certificates_verified = 0;
};
CertificateStats certificate_stats();
void reset_certificate_stats();

}  // namespace zsum::lp
