#pragma once

#include "rational.hpp"

#include <vector>

namespace hs::lp {

enum class Rel { LE, GE, EQ };

struct Constraint {
  std::vector<Rational> a;
  Rel rel;
  Rational b;
};

// maximize c.x subject to constraints, x >= 0
struct Problem {
  int nvars = 0;
  std::vector<Rational> c;
  std::vector<Constraint> rows;

  void add(std::vector<Rational> a, Rel rel, Rational b) { rows.push_back({std::move(a), rel, std::move(b)}); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

// Dense tableau with the objective in the last row (reduced costs) and
// right-hand sides in the last column. Bland's rule throughout.
class Tableau {
 public:
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;
  int m, ncols;

  Tableau(int rows, int cols) : t(rows + 1, std::vector<Rational>(cols + 1)), basis(rows, -1), m(rows), ncols(cols) {}

  Rational& rhs(int i) { return t[i][ncols]; }
  std::vector<Rational>& obj() { return t[m]; }

  void pivot(int r, int c) {
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // load objective "maximize cost.x" as reduced costs over the current basis
  void set_objective(const std::vector<Rational>& cost) {
    auto& z = obj();
    for (int j = 0; j <= ncols; ++j) z[j] = 0;
    for (int j = 0; j < ncols; ++j) z[j] = -cost[j];
    for (int i = 0; i < m; ++i) {
      int b = basis[i];
      if (b < 0 || z[b] == 0) continue;
      Rational f = z[b];
      for (int j = 0; j <= ncols; ++j) z[j] -= f * t[i][j];
    }
  }

  // returns false when unbounded; columns flagged in `banned` never enter
  bool optimize(const std::vector<char>& banned) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (!banned[j] && obj()[j] < 0) { enter = j; break; }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

// Exact two-phase simplex.
inline Solution maximize(const Problem& P) {
  const int n = P.nvars, m = static_cast<int>(P.rows.size());
  int nslack = 0, nart = 0;
  for (const auto& r : P.rows) {
    bool neg = r.b < 0;
    Rel rel = r.rel;
    if (neg && rel != Rel::EQ) rel = rel == Rel::LE ? Rel::GE : Rel::LE;
    if (rel != Rel::EQ) ++nslack;
    if (rel != Rel::LE) ++nart;
  }
  const int ncols = n + nslack + nart;
  detail::Tableau T(m, ncols);
  int s = n, a = n + nslack;
  for (int i = 0; i < m; ++i) {
    const auto& r = P.rows[i];
    Rational sgn = r.b < 0 ? -1 : 1;
    Rel rel = r.rel;
    if (r.b < 0 && rel != Rel::EQ) rel = rel == Rel::LE ? Rel::GE : Rel::LE;
    for (int j = 0; j < n; ++j) T.t[i][j] = sgn * r.a[j];
    T.rhs(i) = sgn * r.b;
    if (rel == Rel::LE) {
      T.t[i][s] = 1;
      T.basis[i] = s++;
    } else {
      if (rel == Rel::GE) T.t[i][s++] = -1;
      T.t[i][a] = 1;
      T.basis[i] = a++;
    }
  }

  std::vector<char> banned(ncols, 0);
  if (nart > 0) {
    std::vector<Rational> phase1(ncols);
    for (int j = n + nslack; j < ncols; ++j) phase1[j] = -1;
    T.set_objective(phase1);
    T.optimize(banned);
    if (T.obj()[ncols] < 0) return {Status::Infeasible, {}, {}};
    // drive remaining artificials out of the basis
    for (int i = 0; i < m; ++i) {
      if (T.basis[i] < n + nslack) continue;
      for (int j = 0; j < n + nslack; ++j)
        if (T.t[i][j] != 0) {
          T.pivot(i, j);
          break;
        }
    }
    for (int j = n + nslack; j < ncols; ++j) banned[j] = 1;
  }
  std::vector<Rational> cost(ncols);
  for (int j = 0; j < n; ++j) cost[j] = P.c[j];
  T.set_objective(cost);
  if (!T.optimize(banned)) return {Status::Unbounded, {}, {}};
  Solution sol{Status::Optimal, T.obj()[ncols], std::vector<Rational>(n)};
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < n) sol.x[T.basis[i]] = T.rhs(i);
  return sol;
}

}  // namespace hs::lp
