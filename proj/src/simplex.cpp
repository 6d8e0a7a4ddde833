#include "tropos/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace tropos {

namespace {

// Dense tableau: rows of [A | b] kept in basis-reduced form.
struct Tableau {
  int m, n;
  std::vector<std::vector<Rational>> a;  // m x n
  std::vector<Rational> b;               // m
  std::vector<int> basis;                // m, column index of basic variable

  void pivot(int row, int col) {
    Rational p = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }

  // Bland's rule on the given objective; costs[j] is the cost of column j.
  // Returns false when the problem is unbounded below.
  bool optimize(const std::vector<Rational>& costs) {
    for (;;) {
      // reduced costs: r_j = c_j - c_B . B^{-1} A_j
      std::vector<Rational> cb(m);
      for (int i = 0; i < m; ++i) cb[i] = costs[basis[i]];
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        bool basic = false;
        for (int i = 0; i < m; ++i)
          if (basis[i] == j) basic = true;
        if (basic) continue;
        Rational r = costs[j];
        for (int i = 0; i < m; ++i)
          if (a[i][j] != 0) r -= cb[i] * a[i][j];
        if (r < 0) enter = j;  // smallest index: Bland
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best(0);
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave]))
          leave = i, best = ratio;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution simplex_solve(const std::vector<std::vector<Rational>>& a0,
                         const std::vector<Rational>& b0, const std::vector<Rational>& c) {
  int m = (int)a0.size();
  int n = m == 0 ? (int)c.size() : (int)a0[0].size();
  Tableau t;
  t.m = m;
  t.n = n + m;  // + artificials
  t.a.assign(m, std::vector<Rational>(t.n, Rational(0)));
  t.b.resize(m);
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool neg = b0[i] < 0;
    for (int j = 0; j < n; ++j) t.a[i][j] = neg ? Rational(-a0[i][j]) : a0[i][j];
    t.b[i] = neg ? Rational(-b0[i]) : b0[i];
    t.a[i][n + i] = 1;
    t.basis[i] = n + i;
  }
  // Phase 1: minimize sum of artificials.
  std::vector<Rational> phase1(t.n, Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + i] = 1;
  bool ok = t.optimize(phase1);
  assert(ok);
  (void)ok;
  Rational art(0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= n) art += t.b[i];
  if (art != 0) return {LpStatus::Infeasible, {}, Rational(0)};
  // Drive remaining artificials out of the basis (degenerate rows).
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (t.a[i][j] != 0) col = j;
    if (col >= 0) t.pivot(i, col);
    // else: the row is identically zero over the original columns; harmless.
  }
  // Phase 2. Non-basic artificial columns are zeroed so they can never
  // re-enter; basic artificials (degenerate zero rows) stay at value 0.
  std::vector<Rational> costs(t.n, Rational(0));
  for (int j = 0; j < n; ++j) costs[j] = c[j];
  for (int j = n; j < t.n; ++j) {
    bool basic = false;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] == j) basic = true;
    if (!basic)
      for (int i = 0; i < m; ++i) t.a[i][j] = 0;
  }
  if (!t.optimize(costs)) return {LpStatus::Unbounded, {}, Rational(0)};
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.b[i];
  sol.objective = Rational(0);
  for (int j = 0; j < n; ++j)
    if (sol.x[j] != 0) sol.objective += c[j] * sol.x[j];
  return sol;
}

std::optional<std::vector<Rational>> strict_feasible_point(
    const std::vector<std::vector<Rational>>& strict,
    const std::vector<std::vector<Rational>>& weak, int dim) {
  // Variables: y_i in [0,2] (xi_i = y_i - 1), u_i box slacks, delta, v
  // (delta <= 1 slack), t_k strict-row slacks, w_m weak-row slacks.
  int ns = (int)strict.size(), nw = (int)weak.size();
  int n = dim + dim + 1 + 1 + ns + nw;
  int ydix = 0, uix = dim, dix = 2 * dim, vix = 2 * dim + 1, tix = 2 * dim + 2,
      wix = 2 * dim + 2 + ns;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int i = 0; i < dim; ++i) {  // y_i + u_i = 2
    std::vector<Rational> row(n, Rational(0));
    row[ydix + i] = 1;
    row[uix + i] = 1;
    a.push_back(row);
    b.push_back(Rational(2));
  }
  {  // delta + v = 1
    std::vector<Rational> row(n, Rational(0));
    row[dix] = 1;
    row[vix] = 1;
    a.push_back(row);
    b.push_back(Rational(1));
  }
  for (int k = 0; k < ns; ++k) {  // s_k.(y - 1) + delta + t_k = 0
    std::vector<Rational> row(n, Rational(0));
    Rational rhs(0);
    for (int i = 0; i < dim; ++i) {
      row[ydix + i] = strict[k][i];
      rhs += strict[k][i];
    }
    row[dix] = 1;
    row[tix + k] = 1;
    a.push_back(row);
    b.push_back(rhs);
  }
  for (int m_ = 0; m_ < nw; ++m_) {  // w_m.(y - 1) + w = 0
    std::vector<Rational> row(n, Rational(0));
    Rational rhs(0);
    for (int i = 0; i < dim; ++i) {
      row[ydix + i] = weak[m_][i];
      rhs += weak[m_][i];
    }
    row[wix + m_] = 1;
    a.push_back(row);
    b.push_back(rhs);
  }
  std::vector<Rational> c(n, Rational(0));
  c[dix] = -1;  // max delta
  LpSolution sol = simplex_solve(a, b, c);
  if (sol.status != LpStatus::Optimal) return std::nullopt;  // cannot happen: y=1 feasible
  if (sol.x[dix] <= 0) return std::nullopt;
  std::vector<Rational> xi(dim);
  for (int i = 0; i < dim; ++i) xi[i] = sol.x[ydix + i] - 1;
  return xi;
}

std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
farkas_certificate(const std::vector<std::vector<Rational>>& strict,
                   const std::vector<std::vector<Rational>>& weak, int dim) {
  int ns = (int)strict.size(), nw = (int)weak.size();
  int n = ns + nw;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int i = 0; i < dim; ++i) {  // sum lambda_k strict_k[i] + sum mu_m weak_m[i] = 0
    std::vector<Rational> row(n, Rational(0));
    for (int k = 0; k < ns; ++k) row[k] = strict[k][i];
    for (int m_ = 0; m_ < nw; ++m_) row[ns + m_] = weak[m_][i];
    a.push_back(row);
    b.push_back(Rational(0));
  }
  {  // sum lambda = 1
    std::vector<Rational> row(n, Rational(0));
    for (int k = 0; k < ns; ++k) row[k] = 1;
    a.push_back(row);
    b.push_back(Rational(1));
  }
  std::vector<Rational> c(n, Rational(0));
  LpSolution sol = simplex_solve(a, b, c);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  std::vector<Rational> lambda(sol.x.begin(), sol.x.begin() + ns);
  std::vector<Rational> mu(sol.x.begin() + ns, sol.x.end());
  return std::make_pair(std::move(lambda), std::move(mu));
}

}  // namespace tropos
