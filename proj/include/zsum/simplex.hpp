#pragma once

#include <iosfwd>
#include <vector>

#include "zsum/linear_program.hpp"

namespace zsum::lp {

// Incremental exact simplex over an integer tableau.
//
// Internally the tableau is kept fraction-free: every entry is an integer and
// the whole dictionary shares one positive denominator `det` (the determinant
// of the current basis, up to sign). A pivot on (r, c) maps entry t_ij to
// (t_rc * t_ij - t_ic * t_rj) / det, where the division is exact, so no gcd
// normalization is ever needed and entries stay determinant-sized.
//
// The incremental interface exists for the staged analyses: solve a base
// program once, pin its optimal objective with add_equality, then sweep many
// objectives over the same feasible face with set_objective + solve. Each
// re-solve starts from the previous (still feasible) basis.
class SimplexSolver {
 public:
  explicit SimplexSolver(LinearProgram lp);

  SimplexSolver(const SimplexSolver&) = default;
  SimplexSolver& operator=(const SimplexSolver&) = default;
  SimplexSolver(SimplexSolver&&) = default;
  SimplexSolver& operator=(SimplexSolver&&) = default;

  // Solves (first call) or re-optimizes after set_objective/add_equality.
  Status solve();

  // Replaces the objective. The current basis stays primal feasible, so the
  // next solve() skips phase 1.
  void set_objective(Sense sense, std::vector<Rational> objective);

  // Appends an equality constraint that the current optimal point satisfies
  // exactly (the staged-LP pattern). Throws std::logic_error otherwise.
  void add_equality(std::vector<Rational> coeffs, Rational rhs);

  // The effective program, including constraints added after construction.
  const LinearProgram& program() const { return lp_; }

  Status status() const { return status_; }

  // Extracts the solution for program(). Optimal solutions are verified
  // against the original constraint data (exact primal/dual certificate)
  // before being returned; a violation throws std::logic_error.
  Solution solution() const;

  // Just the optimal objective value, certificate-checked exactly like
  // solution() but skipping the per-variable extraction work. Intended for
  // sweeps that solve many objectives and only compare optima.
  Rational objective_value() const;

  // Plain-text dump of the current tableau (diagnostics only).
  void dump_tableau(std::ostream& os) const;

 private:
  struct ColInfo {
    enum Kind { structural_pos, structural_neg, slack, surplus, artificial };
    Kind kind;
    std::size_t ref;  // variable index (structural) or row index (others)
    bool blocked = false;
  };
  struct RowInfo {
    bool flipped = false;
    mpz_class scale{1};
    std::size_t unit_col = 0;  // column that is e_i in the original data
    bool dropped = false;
    std::size_t tab_row = 0;  // valid when !dropped
  };

  void build_tableau();
  void install_objective();
  Status run_simplex(bool phase_one);
  void pivot(std::size_t row, std::size_t col);
  void normalize_det_sign();
  bool pivot_out_or_drop(std::size_t tab_row);
  void drop_row(std::size_t tab_row);
  void verify_optimal() const;
  Rational cell_value(const mpz_class& num) const;

  LinearProgram lp_;
  std::vector<ColInfo> cols_;
  std::vector<RowInfo> rows_;             // one per lp_ constraint
  std::vector<std::vector<mpz_class>> orig_;  // original integer rows (verification)
  std::vector<mpz_class> orig_rhs_;
  std::vector<std::vector<mpz_class>> tab_;   // live tableau rows
  std::vector<mpz_class> rhs_;
  std::vector<std::size_t> basis_;            // per tableau row: column index
  std::vector<mpz_class> obj_row_;            // det * (z_j - c_j), phase objective
  std::vector<mpz_class> cost_;               // scaled integer objective (per column)
  mpz_class obj_scale_{1};
  mpz_class det_{1};
  std::vector<std::size_t> row_of_tab_;       // tableau row -> lp_ constraint index
  bool phase1_done_ = false;
  bool optimized_ = false;
  Status status_ = Status::infeasible;
};

}  // namespace zsum::lp
