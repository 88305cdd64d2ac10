#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <vector>

namespace delpezzo {

// Minimal exact-rational simplex for the two LP shapes this project needs
// (denominator min-max and boundary feasibility). Standard form:
//   minimize c.x  subject to  A x = b, x >= 0.
// Two-phase method with Bland's rule, so termination is guaranteed and the
// result is deterministic.
struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  std::vector<Rat> x;
  Rat objective = Rat(0);
};

class SimplexSolver {
 public:
  SimplexSolver(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                std::vector<Rat> c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    m_ = A_.size();
    n_ = m_ ? A_[0].size() : c_.size();
    if (c_.size() != n_) throw std::invalid_argument("lp: cost size mismatch");
    for (auto& row : A_)
      if (row.size() != n_) throw std::invalid_argument("lp: row size mismatch");
    if (b_.size() != m_) throw std::invalid_argument("lp: rhs size mismatch");
  }

  LPResult solve() {
    // Tableau over the original variables plus m artificials.
    size_t total = n_ + m_;
    T_.assign(m_, std::vector<Rat>(total + 1, Rat(0)));
    basis_.assign(m_, 0);
    for (size_t i = 0; i < m_; ++i) {
      Rat s = b_[i] < Rat(0) ? Rat(-1) : Rat(1);
      for (size_t j = 0; j < n_; ++j) T_[i][j] = s * A_[i][j];
      T_[i][total] = s * b_[i];
      T_[i][n_ + i] = Rat(1);
      basis_[i] = (int)(n_ + i);
    }
    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> cost1(total, Rat(0));
    for (size_t j = n_; j < total; ++j) cost1[j] = Rat(1);
    Rat p1 = run(cost1, total);
    if (p1 != Rat(0)) return {LPResult::Status::Infeasible, {}, Rat(0)};
    // Pivot any residual artificial out of the basis (degenerate rows).
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < (int)n_) continue;
      size_t j = 0;
      for (; j < n_; ++j)
        if (T_[i][j] != Rat(0)) break;
      if (j < n_) pivot(i, j, total);
      // An all-zero row is a redundant constraint; its artificial stays basic
      // at value zero and never re-enters (phase-2 cost treats it as +inf).
    }
    // Phase 2.
    std::vector<Rat> cost2(total, Rat(0));
    for (size_t j = 0; j < n_; ++j) cost2[j] = c_[j];
    bool bounded = run_phase2(cost2, total);
    if (!bounded) return {LPResult::Status::Unbounded, {}, Rat(0)};
    LPResult r;
    r.status = LPResult::Status::Optimal;
    r.x.assign(n_, Rat(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < (int)n_) r.x[basis_[i]] = T_[i][total];
    r.objective = Rat(0);
    for (size_t j = 0; j < n_; ++j) r.objective += c_[j] * r.x[j];
    return r;
  }

 private:
  std::vector<std::vector<Rat>> A_;
  std::vector<Rat> b_, c_;
  size_t m_ = 0, n_ = 0;
  std::vector<std::vector<Rat>> T_;
  std::vector<int> basis_;

  void pivot(size_t row, size_t col, size_t total) {
    Rat p = T_[row][col];
    for (size_t j = 0; j <= total; ++j) T_[row][j] /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || T_[i][col] == Rat(0)) continue;
      Rat f = T_[i][col];
      for (size_t j = 0; j <= total; ++j) T_[i][j] -= f * T_[row][j];
    }
    basis_[row] = (int)col;
  }

  // Reduced cost of column j for the given cost vector.
  Rat reduced_cost(const std::vector<Rat>& cost, size_t j, size_t total) const {
    Rat r = cost[j];
    for (size_t i = 0; i < m_; ++i) r -= cost[basis_[i]] * T_[i][j];
    (void)total;
    return r;
  }

  // Bland's-rule simplex over allowed columns; returns the objective value.
  Rat run(const std::vector<Rat>& cost, size_t total) {
    while (true) {
      size_t enter = total;
      for (size_t j = 0; j < total; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m_; ++i)
          if (basis_[i] == (int)j) basic = true;
        if (basic) continue;
        if (reduced_cost(cost, j, total) < Rat(0)) {
          enter = j;
          break;
        }
      }
      if (enter == total) break;
      size_t leave = m_;
      Rat best(0);
      for (size_t i = 0; i < m_; ++i) {
        if (T_[i][enter] <= Rat(0)) continue;
        Rat ratio = T_[i][total] / T_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave]))
          leave = i, best = ratio;
      }
      if (leave == m_) throw std::runtime_error("lp: phase objective unbounded");
      pivot(leave, enter, total);
    }
    Rat obj(0);
    for (size_t i = 0; i < m_; ++i) obj += cost[basis_[i]] * T_[i][total];
    return obj;
  }

  // Phase 2: artificial columns are barred from entering. Returns false when
  // the objective is unbounded below.
  bool run_phase2(const std::vector<Rat>& cost, size_t total) {
    while (true) {
      size_t enter = total;
      for (size_t j = 0; j < n_; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m_; ++i)
          if (basis_[i] == (int)j) basic = true;
        if (basic) continue;
        if (reduced_cost(cost, j, total) < Rat(0)) {
          enter = j;
          break;
        }
      }
      if (enter == total) return true;
      size_t leave = m_;
      Rat best(0);
      for (size_t i = 0; i < m_; ++i) {
        if (T_[i][enter] <= Rat(0)) continue;
        Rat ratio = T_[i][total] / T_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave]))
          leave = i, best = ratio;
      }
      if (leave == m_) return false;
      pivot(leave, enter, total);
    }
  }
};

inline LPResult solve_lp(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                         std::vector<Rat> c) {
  return SimplexSolver(std::move(A), std::move(b), std::move(c)).solve();
}

}  // namespace delpezzo
