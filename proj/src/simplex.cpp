#include "invlearn/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace invlearn {

namespace {

constexpr double kEps = 1e-9;
constexpr double kPivotEps = 1e-11;

struct Tableau {
  int m, n;                    // rows, structural columns
  std::vector<Vec> t;          // m x (n + m); the artificial block tracks B^{-1}
  Vec rhs;
  std::vector<int> basis;

  void pivot(int r, int col) {
    const double p = t[r][col];
    const double inv = 1.0 / p;
    for (double& v : t[r]) v *= inv;
    rhs[r] *= inv;
    t[r][col] = 1.0;  // guard against roundoff
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = t[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j < n + m; ++j) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
      t[i][col] = 0.0;
    }
    basis[r] = col;
  }

  // Bland's rule: enter the lowest-index column with negative reduced cost,
  // leave by ratio test with lowest basis index on ties
  bool iterate(const Vec& cost, int max_col) {
    Vec y(m);
    for (int i = 0; i < m; ++i) y[i] = cost[basis[i]];
    int enter = -1;
    for (int j = 0; j < max_col; ++j) {
      double red = cost[j];
      for (int i = 0; i < m; ++i) red -= y[i] * t[i][j];
      if (red < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;  // optimal
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = rhs[i] / t[i][enter];
        if (ratio < best - kEps ||
            (ratio < best + kEps && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("simplex: unbounded linear program");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_standard_lp(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("simplex: b size mismatch");

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t.assign(m, Vec(n + m, 0.0));
  tb.rhs.assign(m, 0.0);
  tb.basis.resize(m);
  Vec sign(m, 1.0);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(A[i].size()) != n)
      throw std::invalid_argument("simplex: row size mismatch");
    sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) tb.t[i][j] = sign[i] * A[i][j];
    tb.rhs[i] = sign[i] * b[i];
    tb.t[i][n + i] = 1.0;
    tb.basis[i] = n + i;
  }

  // phase I: drive out the artificials
  Vec phase1_cost(n + m, 0.0);
  for (int i = 0; i < m; ++i) phase1_cost[n + i] = 1.0;
  int guard = 0;
  const int guard_cap = 20000 * (m + n + 1);
  while (tb.iterate(phase1_cost, n + m)) {
    if (++guard > guard_cap) throw std::runtime_error("simplex: phase I cycle guard hit");
  }
  double art = 0.0;
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= n) art += tb.rhs[i];
  if (art > 1e-7) throw std::runtime_error("simplex: infeasible linear program");
  // pivot residual artificials out where possible; all-zero rows are redundant
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (std::fabs(tb.t[i][j]) > 1e-8) {
        col = j;
        break;
      }
    if (col >= 0) tb.pivot(i, col);
  }

  // phase II over the structural columns only
  Vec phase2_cost(n + m, 0.0);
  for (int j = 0; j < n; ++j) phase2_cost[j] = c[j];
  guard = 0;
  while (tb.iterate(phase2_cost, n)) {
    if (++guard > guard_cap) throw std::runtime_error("simplex: phase II cycle guard hit");
  }

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) sol.x[tb.basis[i]] = tb.rhs[i];
  sol.objective = dot(sol.x, c);
  // the artificial block holds B^{-1} of the sign-adjusted system, so the dual
  // is y = c_B . B^{-1} unflipped row by row
  sol.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double yi = 0.0;
    for (int r = 0; r < m; ++r) yi += phase2_cost[tb.basis[r]] * tb.t[r][n + i];
    sol.dual[i] = sign[i] * yi;
  }
  return sol;
}

}  // namespace invlearn
