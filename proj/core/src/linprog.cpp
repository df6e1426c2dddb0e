#include "plqcert/linprog.hpp"

namespace plq {

namespace {

// Dense simplex tableau over the rationals.
//
// Standard form: minimize c.y subject to A y = b, y >= 0, b >= 0.
// Bland's anti-cycling rule for both entering and leaving choices.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)) {}

  Rational& a(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
  Rational& b(std::size_t i) { return t_[i * (n_ + 1) + n_]; }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = 1 / a(pr, pc);
    for (std::size_t j = 0; j <= n_; ++j) t_[pr * (n_ + 1) + j] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == pr) continue;
      Rational f = a(i, pc);
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) t_[i * (n_ + 1) + j] -= f * t_[pr * (n_ + 1) + j];
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<Rational> t_;
};

enum class SimplexStatus { Optimal, Unbounded };

// Minimizes cost over the tableau; basis[i] is the basic column of row i.
// cost entries for basic columns must be reduced before entry.
SimplexStatus run_simplex(Tableau& tab, std::vector<Rational>& cost, Rational& cost_rhs,
                          std::vector<std::size_t>& basis) {
  const std::size_t m = tab.rows();
  const std::size_t n = tab.cols();
  for (;;) {
    // Entering: lowest-index column with negative reduced cost.
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) return SimplexStatus::Optimal;

    // Leaving: min ratio, ties by lowest basic variable index.
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.a(i, enter) <= 0) continue;
      Rational ratio = tab.b(i) / tab.a(i, enter);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return SimplexStatus::Unbounded;

    tab.pivot(leave, enter);
    Rational f = cost[enter];
    for (std::size_t j = 0; j < n; ++j) cost[j] -= f * tab.a(leave, j);
    cost_rhs -= f * tab.b(leave);
    basis[leave] = enter;
  }
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.n_vars;
  for (const auto& c : lp.constraints)
    if (c.a.dim() != n) throw InputError("lp constraint dimension mismatch");
  if (lp.objective.dim() != n) throw InputError("lp objective dimension mismatch");

  const std::size_t m = lp.constraints.size();
  std::size_t n_slack = 0;
  for (const auto& c : lp.constraints)
    if (c.rel == Relation::LessEq) ++n_slack;

  // Columns: x+ (n), x- (n), slacks, artificials (one per row).
  const std::size_t n_struct = 2 * n + n_slack;
  const std::size_t n_total = n_struct + m;
  Tableau tab(m, n_total);
  std::vector<std::size_t> basis(m);

  std::size_t slack_idx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    bool flip = c.rhs < 0;
    Rational sign = flip ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      tab.a(i, j) = sign * c.a[j];
      tab.a(i, n + j) = -sign * c.a[j];
    }
    if (c.rel == Relation::LessEq) {
      tab.a(i, 2 * n + slack_idx) = sign;
      ++slack_idx;
    }
    tab.b(i) = sign * c.rhs;
    tab.a(i, n_struct + i) = 1;
    basis[i] = n_struct + i;
  }

  // Phase 1: drive artificials to zero.
  {
    std::vector<Rational> cost(n_total, Rational(0));
    Rational cost_rhs(0);
    for (std::size_t i = 0; i < m; ++i) {
      // Reduce the artificial's unit cost against its own row.
      for (std::size_t j = 0; j < n_total; ++j) cost[j] -= tab.a(i, j);
      cost_rhs -= tab.b(i);
      cost[n_struct + i] += 1;
    }
    run_simplex(tab, cost, cost_rhs, basis);
    if (cost_rhs != 0) return LpInfeasible{};
    // Pivot lingering artificials out of the basis where possible; rows where
    // it is impossible are redundant zero rows and stay harmless.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n_struct) continue;
      for (std::size_t j = 0; j < n_struct; ++j) {
        if (tab.a(i, j) != 0) {
          tab.pivot(i, j);
          basis[i] = j;
          break;
        }
      }
    }
  }

  // Phase 2: original objective, as minimization of -objective for Max.
  std::vector<Rational> cost(n_total, Rational(0));
  Rational obj_sign = (lp.sense == Sense::Max) ? Rational(-1) : Rational(1);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = obj_sign * lp.objective[j];
    cost[n + j] = -obj_sign * lp.objective[j];
  }
  // Artificials must not re-enter.
  Rational cost_rhs(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n_struct) continue;
    Rational f = cost[basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < n_total; ++j) cost[j] -= f * tab.a(i, j);
    cost_rhs -= f * tab.b(i);
  }
  for (std::size_t i = 0; i < m; ++i) cost[n_struct + i] = 1;  // block artificials

  if (run_simplex(tab, cost, cost_rhs, basis) == SimplexStatus::Unbounded) return LpUnbounded{};

  RVector x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += tab.b(i);
    else if (basis[i] < 2 * n) x[basis[i] - n] -= tab.b(i);
  }
  Rational value = dot(lp.objective, x);
  return LpOptimal{value, x};
}

LpOutcome lp_maximize(const RVector& objective, const std::vector<LinearProgram::Constraint>& cons,
                      std::size_t n_vars) {
  LinearProgram lp;
  lp.objective = objective;
  lp.constraints = cons;
  lp.n_vars = n_vars;
  lp.sense = Sense::Max;
  return lp_solve(lp);
}

bool lp_feasible(const std::vector<LinearProgram::Constraint>& cons, std::size_t n_vars) {
  LinearProgram lp;
  lp.objective = RVector(n_vars);
  lp.constraints = cons;
  lp.n_vars = n_vars;
  lp.sense = Sense::Max;
  return !std::holds_alternative<LpInfeasible>(lp_solve(lp));
}

}  // namespace plq
