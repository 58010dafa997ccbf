#include "zsum/simplex.hpp"

#include <atomic>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace zsum::lp {

namespace {

std::atomic<std::uint64_t> g_optimal_solves{0};
std::atomic<std::uint64_t> g_certificates_verified{0};

mpz_class lcm_of_denominators(const std::vector<Rational>& values, const Rational& extra) {
  mpz_class l(1);
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra.den().get_mpz_t());
  return l;
}

// scaled integer coefficient: r * scale, exact by construction of scale
mpz_class scaled(const Rational& r, const mpz_class& scale) {
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
  out *= r.num();
  return out;
}

}  // namespace

CertificateStats certificate_stats() {
  return {g_optimal_solves.load(), g_certificates_verified.load()};
}

void reset_certificate_stats() {
  g_optimal_solves = 0;
  g_certificates_verified = 0;
}

SimplexSolver::SimplexSolver(LinearProgram lp) : lp_(std::move(lp)) {
  if (lp_.num_vars() == 0) throw std::invalid_argument("linear program has no variables");
  if (!lp_.var_kinds.empty() && lp_.var_kinds.size() != lp_.num_vars())
    throw std::invalid_argument("var_kinds size does not match variable count");
  for (const auto& c : lp_.constraints)
    if (c.coeffs.size() != lp_.num_vars())
      throw std::invalid_argument("constraint row length does not match variable count");
  build_tableau();
}

void SimplexSolver::build_tableau() {
  const std::size_t nvars = lp_.num_vars();
  const std::size_t nrows = lp_.constraints.size();

  std::vector<std::size_t> pos_col(nvars), neg_col(nvars, SIZE_MAX);
  for (std::size_t j = 0; j < nvars; ++j) {
    pos_col[j] = cols_.size();
    cols_.push_back({ColInfo::structural_pos, j});
    if (lp_.kind(j) == VarKind::free_var) {
      neg_col[j] = cols_.size();
      cols_.push_back({ColInfo::structural_neg, j});
    }
  }

  rows_.resize(nrows);
  struct PendingRow {
    std::vector<mpz_class> coeffs;
    mpz_class rhs;
    Relation rel;
  };
  std::vector<PendingRow> pending(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    const Constraint& c = lp_.constraints[i];
    mpz_class s = lcm_of_denominators(c.coeffs, c.rhs);
    rows_[i].scale = s;
    PendingRow& p = pending[i];
    p.coeffs.assign(cols_.size(), mpz_class(0));
    for (std::size_t j = 0; j < nvars; ++j) {
      if (c.coeffs[j].is_zero()) continue;
      mpz_class v = scaled(c.coeffs[j], s);
      p.coeffs[pos_col[j]] = v;
      if (neg_col[j] != SIZE_MAX) p.coeffs[neg_col[j]] = -v;
    }
    p.rhs = scaled(c.rhs, s);
    p.rel = c.rel;
    // flip to make the rhs nonnegative, and turn ">= 0" rows into "<= 0" so
    // their slacks can serve as the initial basis without artificials
    if (p.rhs < 0 || (p.rhs == 0 && p.rel == Relation::ge)) {
      rows_[i].flipped = true;
      for (auto& v : p.coeffs) v = -v;
      p.rhs = -p.rhs;
      if (p.rel == Relation::le) p.rel = Relation::ge;
      else if (p.rel == Relation::ge) p.rel = Relation::le;
    }
  }

  // slack / surplus / artificial columns, in row order
  std::vector<std::size_t> basis_col(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    switch (pending[i].rel) {
      case Relation::le: {
        std::size_t sc = cols_.size();
        cols_.push_back({ColInfo::slack, i});
        basis_col[i] = sc;
        rows_[i].unit_col = sc;
        break;
      }
      case Relation::ge: {
        cols_.push_back({ColInfo::surplus, i});
        std::size_t ac = cols_.size();
        cols_.push_back({ColInfo::artificial, i});
        basis_col[i] = ac;
        rows_[i].unit_col = ac;
        break;
      }
      case Relation::eq: {
        std::size_t ac = cols_.size();
        cols_.push_back({ColInfo::artificial, i});
        basis_col[i] = ac;
        rows_[i].unit_col = ac;
        break;
      }
    }
  }

  const std::size_t ncols = cols_.size();
  orig_.assign(nrows, {});
  orig_rhs_.resize(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    auto& row = orig_[i];
    row = std::move(pending[i].coeffs);
    row.resize(ncols, mpz_class(0));
    for (std::size_t c = nvars + 0; c < ncols; ++c) {
      if (cols_[c].ref != i) continue;
      if (cols_[c].kind == ColInfo::slack || cols_[c].kind == ColInfo::artificial)
        row[c] = 1;
      else if (cols_[c].kind == ColInfo::surplus)
        row[c] = -1;
    }
    orig_rhs_[i] = pending[i].rhs;
    rows_[i].tab_row = i;
  }

  tab_ = orig_;
  rhs_ = orig_rhs_;
  basis_ = basis_col;
  row_of_tab_.resize(nrows);
  for (std::size_t i = 0; i < nrows; ++i) row_of_tab_[i] = i;
  det_ = 1;
}

void SimplexSolver::install_objective() {
  obj_scale_ = lcm_of_denominators(lp_.objective, Rational(0));
  cost_.assign(cols_.size(), mpz_class(0));
  const bool negate = lp_.sense == Sense::minimize;
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (cols_[c].kind != ColInfo::structural_pos && cols_[c].kind != ColInfo::structural_neg)
      continue;
    const Rational& r = lp_.objective[cols_[c].ref];
    if (r.is_zero()) continue;
    mpz_class v = scaled(r, obj_scale_);
    if (negate != (cols_[c].kind == ColInfo::structural_neg)) v = -v;
    cost_[c] = v;
  }

  obj_row_.assign(cols_.size(), mpz_class(0));
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    mpz_class acc(0);
    for (std::size_t k = 0; k < tab_.size(); ++k) {
      if (cost_[basis_[k]] != 0) acc += cost_[basis_[k]] * tab_[k][j];
    }
    acc -= det_ * cost_[j];
    obj_row_[j] = std::move(acc);
  }
}

void SimplexSolver::normalize_det_sign() {
  if (det_ >= 0) return;
  det_ = -det_;
  for (auto& row : tab_)
    for (auto& v : row) v = -v;
  for (auto& v : rhs_) v = -v;
  for (auto& v : obj_row_) v = -v;
}

void SimplexSolver::pivot(std::size_t r, std::size_t c) {
  const mpz_class piv = tab_[r][c];
  const std::size_t ncols = cols_.size();
  mpz_class tmp;
  auto update_row = [&](std::vector<mpz_class>& row, const mpz_class& factor) {
    if (factor == 0) {
      for (std::size_t j = 0; j < ncols; ++j) {
        if (row[j] == 0) continue;
        mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), det_.get_mpz_t());
      }
    } else {
      const std::vector<mpz_class>& prow = tab_[r];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (row[j] == 0 && prow[j] == 0) continue;
        mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), det_.get_mpz_t());
      }
    }
  };
  auto update_scalar = [&](mpz_class& v, const mpz_class& factor, const mpz_class& pv) {
    mpz_mul(tmp.get_mpz_t(), v.get_mpz_t(), piv.get_mpz_t());
    if (factor != 0) mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), pv.get_mpz_t());
    mpz_divexact(v.get_mpz_t(), tmp.get_mpz_t(), det_.get_mpz_t());
  };

  for (std::size_t i = 0; i < tab_.size(); ++i) {
    if (i == r) continue;
    const mpz_class factor = tab_[i][c];
    update_row(tab_[i], factor);
    update_scalar(rhs_[i], factor, rhs_[r]);
  }
  {
    const mpz_class factor = obj_row_[c];
    update_row(obj_row_, factor);
  }
  basis_[r] = c;
  det_ = piv;
  normalize_det_sign();
}

Status SimplexSolver::run_simplex(bool phase_one) {
  const std::size_t ncols = cols_.size();
  mpz_class lhs, rhsv;
  for (;;) {
    // Bland: entering = lowest-index improving column
    std::size_t enter = SIZE_MAX;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (cols_[j].blocked || cols_[j].kind == ColInfo::artificial) continue;
      if (obj_row_[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == SIZE_MAX) return Status::optimal;

    // ratio test; ties broken by lowest basis column index (Bland)
    std::size_t leave = SIZE_MAX;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (tab_[i][enter] <= 0) continue;
      if (leave == SIZE_MAX) {
        leave = i;
        continue;
      }
      mpz_mul(lhs.get_mpz_t(), rhs_[i].get_mpz_t(), tab_[leave][enter].get_mpz_t());
      mpz_mul(rhsv.get_mpz_t(), rhs_[leave].get_mpz_t(), tab_[i][enter].get_mpz_t());
      int cmp = mpz_cmp(lhs.get_mpz_t(), rhsv.get_mpz_t());
      if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) leave = i;
    }
    if (leave == SIZE_MAX) {
      if (phase_one) throw std::logic_error("phase-1 objective unbounded");
      return Status::unbounded;
    }
    pivot(leave, enter);
  }
}

Status SimplexSolver::solve() {
  if (status_ == Status::infeasible && phase1_done_) return status_;

  if (!phase1_done_) {
    // phase 1: maximize minus the sum of artificial values
    obj_scale_ = 1;
    cost_.assign(cols_.size(), mpz_class(0));
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (cols_[c].kind == ColInfo::artificial) cost_[c] = -1;
    obj_row_.assign(cols_.size(), mpz_class(0));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      mpz_class acc(0);
      for (std::size_t k = 0; k < tab_.size(); ++k)
        if (cost_[basis_[k]] != 0) acc += cost_[basis_[k]] * tab_[k][j];
      acc -= det_ * cost_[j];
      obj_row_[j] = std::move(acc);
    }
    run_simplex(true);

    mpz_class value(0);
    for (std::size_t k = 0; k < tab_.size(); ++k)
      if (cost_[basis_[k]] != 0) value += cost_[basis_[k]] * rhs_[k];
    phase1_done_ = true;
    if (value < 0) {
      status_ = Status::infeasible;
      return status_;
    }

    // Drive leftover artificials out of the basis (their values are zero);
    // rows that cannot be pivoted are redundant and get dropped.
    for (std::size_t i = 0; i < tab_.size();) {
      if (cols_[basis_[i]].kind == ColInfo::artificial) {
        if (pivot_out_or_drop(i)) ++i;
        // drop_row erased row i: re-examine same index
      } else {
        ++i;
      }
    }
    for (auto& c : cols_)
      if (c.kind == ColInfo::artificial) c.blocked = true;
    install_objective();
  } else if (!optimized_) {
    // objective or constraints changed; basis is still primal feasible
  }

  status_ = run_simplex(false);
  optimized_ = true;
  return status_;
}

bool SimplexSolver::pivot_out_or_drop(std::size_t tr) {
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].blocked || cols_[j].kind == ColInfo::artificial) continue;
    if (j == basis_[tr]) continue;
    if (tab_[tr][j] != 0) {
      pivot(tr, j);
      return true;
    }
  }
  drop_row(tr);
  return false;
}

void SimplexSolver::drop_row(std::size_t tr) {
  const std::size_t ci = row_of_tab_[tr];
  cols_[basis_[tr]].blocked = true;
  rows_[ci].dropped = true;
  tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(tr));
  rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(tr));
  basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(tr));
  row_of_tab_.erase(row_of_tab_.begin() + static_cast<std::ptrdiff_t>(tr));
  for (std::size_t t = tr; t < row_of_tab_.size(); ++t) rows_[row_of_tab_[t]].tab_row = t;
}

void SimplexSolver::set_objective(Sense sense, std::vector<Rational> objective) {
  if (objective.size() != lp_.num_vars())
    throw std::invalid_argument("objective length does not match variable count");
  lp_.sense = sense;
  lp_.objective = std::move(objective);
  if (phase1_done_ && status_ != Status::infeasible) install_objective();
  optimized_ = false;
}

void SimplexSolver::add_equality(std::vector<Rational> coeffs, Rational rhs) {
  if (coeffs.size() != lp_.num_vars())
    throw std::invalid_argument("constraint row length does not match variable count");
  if (!phase1_done_ || status_ == Status::infeasible)
    throw std::logic_error("add_equality requires a solved, feasible program");

  const std::size_t ci = lp_.constraints.size();
  lp_.add_constraint(coeffs, Relation::eq, rhs);

  mpz_class s = lcm_of_denominators(coeffs, rhs);
  const std::size_t ac = cols_.size();
  cols_.push_back({ColInfo::artificial, ci});
  for (auto& row : tab_) row.emplace_back(0);
  for (auto& row : orig_) row.emplace_back(0);
  obj_row_.emplace_back(0);
  cost_.emplace_back(0);

  std::vector<mpz_class> irow(cols_.size(), mpz_class(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    mpz_class v = scaled(coeffs[j], s);
    // structural columns for variable j come first, in construction order
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].ref != j) continue;
      if (cols_[c].kind == ColInfo::structural_pos) irow[c] = v;
      else if (cols_[c].kind == ColInfo::structural_neg) irow[c] = -v;
    }
  }
  irow[ac] = 1;
  mpz_class irhs = scaled(rhs, s);

  // transform into current basis coordinates: t = det*row - sum_k row[basis_k] * tab_k
  std::vector<mpz_class> trow(cols_.size(), mpz_class(0));
  for (std::size_t j = 0; j < cols_.size(); ++j) trow[j] = det_ * irow[j];
  mpz_class trhs = det_ * irhs;
  for (std::size_t k = 0; k < tab_.size(); ++k) {
    const mpz_class& f = irow[basis_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (tab_[k][j] != 0) trow[j] -= f * tab_[k][j];
    }
    trhs -= f * rhs_[k];
  }
  if (trhs != 0)
    throw std::logic_error("add_equality: constraint is not tight at the current point");

  RowInfo info;
  info.scale = s;
  info.unit_col = ac;
  info.tab_row = tab_.size();
  rows_.push_back(info);
  orig_.push_back(std::move(irow));
  orig_rhs_.push_back(std::move(irhs));
  tab_.push_back(std::move(trow));
  rhs_.push_back(std::move(trhs));
  basis_.push_back(ac);
  row_of_tab_.push_back(ci);

  pivot_out_or_drop(tab_.size() - 1);
  cols_[ac].blocked = true;
  optimized_ = false;
}

Rational SimplexSolver::cell_value(const mpz_class& num) const {
  return Rational(num, det_);
}

Rational SimplexSolver::objective_value() const {
  if (status_ != Status::optimal)
    throw std::logic_error("objective_value requires an optimal basis");
  verify_optimal();
  g_optimal_solves.fetch_add(1, std::memory_order_relaxed);
  g_certificates_verified.fetch_add(1, std::memory_order_relaxed);

  mpz_class num(0);
  for (std::size_t k = 0; k < tab_.size(); ++k)
    if (cost_[basis_[k]] != 0 && rhs_[k] != 0) num += cost_[basis_[k]] * rhs_[k];
  Rational value(num, det_ * obj_scale_);
  return lp_.sense == Sense::minimize ? -value : value;
}

Solution SimplexSolver::solution() const {
  Solution out;
  out.status = status_;
  if (status_ != Status::optimal) return out;

  verify_optimal();
  g_optimal_solves.fetch_add(1, std::memory_order_relaxed);
  g_certificates_verified.fetch_add(1, std::memory_order_relaxed);

  std::vector<std::size_t> row_of_col(cols_.size(), SIZE_MAX);
  for (std::size_t k = 0; k < basis_.size(); ++k) row_of_col[basis_[k]] = k;

  out.primal.assign(lp_.num_vars(), Rational(0));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (row_of_col[c] == SIZE_MAX) continue;
    if (cols_[c].kind == ColInfo::structural_pos)
      out.primal[cols_[c].ref] += cell_value(rhs_[row_of_col[c]]);
    else if (cols_[c].kind == ColInfo::structural_neg)
      out.primal[cols_[c].ref] -= cell_value(rhs_[row_of_col[c]]);
  }

  out.objective_value = Rational(0);
  for (std::size_t j = 0; j < lp_.num_vars(); ++j)
    if (!lp_.objective[j].is_zero()) out.objective_value += lp_.objective[j] * out.primal[j];

  const bool negate = lp_.sense == Sense::minimize;
  out.dual.assign(lp_.constraints.size(), Rational(0));
  for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
    if (rows_[i].dropped) continue;
    Rational yhat(obj_row_[rows_[i].unit_col], det_);
    Rational y = yhat * Rational(rows_[i].scale, obj_scale_);
    if (rows_[i].flipped) y = -y;
    out.dual[i] = negate ? -y : y;
  }
  return out;
}

void SimplexSolver::verify_optimal() const {
  auto fail = [](const char* what) {
    throw std::logic_error(std::string("simplex certificate violation: ") + what);
  };

  std::vector<std::size_t> row_of_col(cols_.size(), SIZE_MAX);
  for (std::size_t k = 0; k < basis_.size(); ++k) row_of_col[basis_[k]] = k;

  // primal values share denominator det_
  std::vector<const mpz_class*> xnum(cols_.size(), nullptr);
  static const mpz_class kZero(0);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (row_of_col[c] == SIZE_MAX) {
      xnum[c] = &kZero;
      continue;
    }
    xnum[c] = &rhs_[row_of_col[c]];
    if (*xnum[c] < 0) fail("negative basic value");
    if (cols_[c].kind == ColInfo::artificial && *xnum[c] != 0) fail("artificial variable nonzero");
  }

  // primal feasibility: orig_row . x == det * rhs for every constraint
  mpz_class acc, expect;
  for (std::size_t i = 0; i < orig_.size(); ++i) {
    acc = 0;
    const auto& row = orig_[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0 && *xnum[j] != 0) acc += row[j] * *xnum[j];
    expect = det_ * orig_rhs_[i];
    if (acc != expect) fail("primal infeasibility");
  }

  // dual feasibility + complementary slackness, duals share denominator det_
  std::vector<mpz_class> rbar(cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) rbar[j] = -det_ * cost_[j];
  for (std::size_t i = 0; i < orig_.size(); ++i) {
    if (rows_[i].dropped) continue;
    const mpz_class& ynum = obj_row_[rows_[i].unit_col];
    if (ynum == 0) continue;
    const auto& row = orig_[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) rbar[j] += ynum * row[j];
  }
  mpz_class lhs(0), rhsv(0);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].kind == ColInfo::artificial) continue;
    if (rbar[j] < 0) fail("dual infeasibility");
    if (*xnum[j] != 0 && rbar[j] != 0) fail("complementary slackness violation");
  }
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (cost_[j] != 0 && *xnum[j] != 0) lhs += cost_[j] * *xnum[j];
  for (std::size_t i = 0; i < orig_.size(); ++i) {
    if (rows_[i].dropped) continue;
    const mpz_class& ynum = obj_row_[rows_[i].unit_col];
    if (ynum != 0 && orig_rhs_[i] != 0) rhsv += ynum * orig_rhs_[i];
  }
  if (lhs != rhsv) fail("strong duality violation");
}

void SimplexSolver::dump_tableau(std::ostream& os) const {
  os << "det = " << det_.get_str() << "\n";
  for (std::size_t i = 0; i < tab_.size(); ++i) {
    os << "row " << i << " (basis col " << basis_[i] << "):";
    for (const auto& v : tab_[i]) os << " " << Rational(v, det_);
    os << " | " << Rational(rhs_[i], det_) << "\n";
  }
  os << "obj:";
  for (const auto& v : obj_row_) os << " " << Rational(v, det_);
  os << "\n";
}

Solution solve(const LinearProgram& lp) {
  SimplexSolver solver(lp);
  solver.solve();
  return solver.solution();
}

std::vector<std::string> certificate_violations(const LinearProgram& lp, const Solution& sol) {
  std::vector<std::string> out;
  if (sol.status != Status::optimal) return out;
  auto note = [&out](std::size_t idx, const std::string& what) {
    std::ostringstream ss;
    ss << what << " (index " << idx << ")";
    out.push_back(ss.str());
  };

  if (sol.primal.size() != lp.num_vars()) {
    out.push_back("primal vector has wrong length");
    return out;
  }
  if (sol.dual.size() != lp.constraints.size()) {
    out.push_back("dual vector has wrong length");
    return out;
  }

  const bool maximize = lp.sense == Sense::maximize;
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    if (lp.kind(j) == VarKind::nonnegative && sol.primal[j].sign() < 0)
      note(j, "negative primal value");

  std::vector<Rational> slack(lp.constraints.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    Rational lhs(0);
    for (std::size_t j = 0; j < c.coeffs.size(); ++j)
      if (!c.coeffs[j].is_zero()) lhs += c.coeffs[j] * sol.primal[j];
    slack[i] = c.rhs - lhs;
    bool ok = c.rel == Relation::le   ? slack[i].sign() >= 0
              : c.rel == Relation::ge ? slack[i].sign() <= 0
                                      : slack[i].is_zero();
    if (!ok) note(i, "primal constraint violated");

    // dual sign conventions
    int s = sol.dual[i].sign();
    if (c.rel == Relation::le && (maximize ? s < 0 : s > 0)) note(i, "dual sign violated");
    if (c.rel == Relation::ge && (maximize ? s > 0 : s < 0)) note(i, "dual sign violated");
    if (!slack[i].is_zero() && s != 0) note(i, "row complementary slackness violated");
  }

  Rational dual_obj(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i)
    if (!sol.dual[i].is_zero()) dual_obj += sol.dual[i] * lp.constraints[i].rhs;

  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    Rational reduced = -lp.objective[j];
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
      if (!lp.constraints[i].coeffs[j].is_zero() && !sol.dual[i].is_zero())
        reduced += sol.dual[i] * lp.constraints[i].coeffs[j];
    // maximize: sum_i y_i a_ij >= c_j (equality when free); minimize mirrored
    if (lp.kind(j) == VarKind::free_var) {
      if (!reduced.is_zero()) note(j, "dual constraint violated for free variable");
    } else if (maximize ? reduced.sign() < 0 : reduced.sign() > 0) {
      note(j, "dual constraint violated");
    }
    if (!sol.primal[j].is_zero() && !reduced.is_zero())
      note(j, "column complementary slackness violated");
  }

  Rational primal_obj(0);
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    if (!lp.objective[j].is_zero()) primal_obj += lp.objective[j] * sol.primal[j];
  if (primal_obj != sol.objective_value) out.push_back("reported objective differs from primal objective");
  if (primal_obj != dual_obj) out.push_back("strong duality violated");
  return out;
}

}  // namespace zsum::lp
