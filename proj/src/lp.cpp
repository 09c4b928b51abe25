#include "fairdiv/lp.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

LpSolution simplex_maximize(LpProblem problem) {
  const int rows = static_cast<int>(problem.a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(problem.a[0].size());
  if (static_cast<int>(problem.basis.size()) != rows)
    throw precondition("simplex basis must have one column per row");

  // Tableau [A | b] with an objective row of reduced costs appended.
  auto& tab = problem.a;
  for (int r = 0; r < rows; ++r) tab[r].push_back(problem.b[r]);
  std::vector<Rational> obj = problem.c;
  obj.push_back(Rational(0));  // objective value (negated as we eliminate)

  auto pivot = [&](int pr, int pc) {
    Rational inv = tab[pr][pc];
    for (auto& v : tab[pr]) v /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || tab[r][pc] == 0) continue;
      Rational factor = tab[r][pc];
      for (int cidx = 0; cidx <= cols; ++cidx) tab[r][cidx] -= factor * tab[pr][cidx];
    }
    if (obj[pc] != 0) {
      Rational factor = obj[pc];
      for (int cidx = 0; cidx <= cols; ++cidx) obj[cidx] -= factor * tab[pr][cidx];
    }
    problem.basis[pr] = pc;
  };

  // Gauss-Jordan the starting basis to the identity.
  for (int r = 0; r < rows; ++r) {
    int col = problem.basis[r];
    require_internal(tab[r][col] != 0, "simplex starting basis is singular");
    pivot(r, col);
  }
  for (int r = 0; r < rows; ++r)
    require_internal(tab[r][cols] >= 0, "simplex starting basis is infeasible");

  const int pivot_guard = 1 << 22;  // Bland's rule terminates; this catches bugs
  for (int step = 0; step < pivot_guard; ++step) {
    // Entering: lowest-index column with positive reduced profit.
    int enter = -1;
    for (int cidx = 0; cidx < cols && enter < 0; ++cidx)
      if (obj[cidx] > 0) enter = cidx;
    if (enter < 0) {
      LpSolution sol;
      sol.objective = -obj[cols];
      sol.x.assign(cols, Rational(0));
      for (int r = 0; r < rows; ++r) sol.x[problem.basis[r]] = tab[r][cols];
      return sol;
    }
    // Leaving: tightest ratio, ties by lowest basic variable index.
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && problem.basis[r] < problem.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    require_internal(leave >= 0, "simplex objective unbounded");
    pivot(leave, enter);
  }
  throw internal_error("simplex exceeded its pivot guard");
}

PropertyReport check_fpo_lp(const Instance& inst, const IntegralAllocation& alloc) {
  for (int i = 0; i < inst.n; ++i)
    if (alloc.has_divisible_share(i))
      throw precondition("DivisiblePresent: fPO checker covers indivisible allocations");
  validate_allocation(inst, alloc);
  std::vector<int> owner(inst.m(), -1);
  for (int i = 0; i < inst.n; ++i)
    for (int g : alloc.bundles[i]) owner[g] = i;
  for (int g = 0; g < inst.m(); ++g)
    if (owner[g] < 0) throw precondition("IncompleteAllocation");

  const int n = inst.n, m = inst.m();
  // Variables: Y_ig (i*m+g), then one surplus slack per agent.
  // Rows: one per good (Σ_i Y_ig = 1), one per agent (u_i(Y_i) - s_i = u_i(A_i)).
  LpProblem lp;
  const int cols = n * m + n;
  lp.a.assign(m + n, std::vector<Rational>(cols, Rational(0)));
  lp.b.assign(m + n, Rational(0));
  lp.c.assign(cols, Rational(0));
  for (int g = 0; g < m; ++g) {
    for (int i = 0; i < n; ++i) lp.a[g][i * m + g] = 1;
    lp.b[g] = 1;
  }
  Rational welfare = 0;
  for (int i = 0; i < n; ++i) {
    int row = m + i;
    for (int g = 0; g < m; ++g) {
      lp.a[row][i * m + g] = inst.util(i, g);
      lp.c[i * m + g] = inst.util(i, g);
    }
    lp.a[row][n * m + i] = -1;
    Rational own = inst.bundle_value(i, alloc.bundles[i]);
    lp.b[row] = own;
    welfare += own;
  }
  // The allocation itself is a basic feasible start: its indicator variables
  // cover the good rows, the slacks (at zero) cover the agent rows.
  lp.basis.resize(m + n);
  for (int g = 0; g < m; ++g) lp.basis[g] = owner[g] * m + g;
  for (int i = 0; i < n; ++i) lp.basis[m + i] = n * m + i;

  LpSolution sol = simplex_maximize(std::move(lp));
  require_internal(sol.objective >= welfare, "fPO program lost its feasible start");
  if (sol.objective == welfare) return PropertyReport::ok();

  PropertyReport report;
  report.holds = false;
  FractionalAllocation dom;
  dom.matrix.assign(n, std::vector<Rational>(m + inst.m_bar(), Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < m; ++g) dom.matrix[i][g] = sol.x[i * m + g];
  report.dominator = std::move(dom);
  return report;
}

}  // namespace fairdiv
