#pragma once

#include <cstddef>
#include <vector>

#include "yaogame/errors.hpp"

namespace yaogame::detail {

struct SimplexOutcome {
  std::vector<double> primal;  // structural variables
  std::vector<double> dual;    // one multiplier per constraint
  double objective = 0.0;
  std::size_t pivots = 0;
  bool degenerate = false;        // a zero-length pivot step occurred
  bool alternate_optima = false;  // a nonbasic column has zero reduced cost at optimum
};

/// Dense tableau simplex for  max c.y  s.t.  M y <= b, y >= 0  with b >= 0,
/// so the slack basis is immediately feasible and no phase-1 is needed.
/// Bland's rule throughout: lowest-index entering column, ratio-test ties
/// broken by lowest basic variable index. Deterministic and cycle-free.
class DenseSimplex {
 public:
  DenseSimplex(const std::vector<std::vector<double>>& m_rows, const std::vector<double>& b,
               const std::vector<double>& c, double tol, std::size_t max_pivots)
      : rows_(m_rows.size()),
        structural_(c.size()),
        cols_(structural_ + rows_),
        tol_(tol),
        max_pivots_(max_pivots),
        tableau_(rows_, std::vector<double>(cols_, 0.0)),
        rhs_(b),
        obj_(cols_, 0.0),
        basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) tableau_[i][j] = m_rows[i][j];
      tableau_[i][structural_ + i] = 1.0;
      basis_[i] = structural_ + i;
    }
    for (std::size_t j = 0; j < structural_; ++j) obj_[j] = c[j];
  }

  SimplexOutcome run() {
    SimplexOutcome out;
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (obj_[j] > tol_) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;  // optimal

      std::size_t leave = rows_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tableau_[i][enter] <= tol_) continue;
        double ratio = rhs_[i] / tableau_[i][enter];
        if (leave == rows_ || ratio < best_ratio - kTieEps ||
            (ratio <= best_ratio + kTieEps && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) {
        throw NonFiniteEntry("linear program is unbounded; matrix entries degenerate");
      }
      if (rhs_[leave] <= kTieEps) out.degenerate = true;

      pivot(leave, enter);
      if (++out.pivots > max_pivots_) {
        throw PivotLimitExceeded("simplex exceeded " + std::to_string(max_pivots_) + " pivots");
      }
    }

    out.primal.assign(structural_, 0.0);
    std::vector<bool> in_basis(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      in_basis[basis_[i]] = true;
      if (basis_[i] < structural_) out.primal[basis_[i]] = rhs_[i];
    }
    out.dual.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.dual[i] = -obj_[structural_ + i];
    out.objective = objective_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!in_basis[j] && obj_[j] > -tol_) {
        out.alternate_optima = true;
        break;
      }
    }
    return out;
  }

 private:
  static constexpr double kTieEps = 1e-12;

  void pivot(std::size_t r, std::size_t e) {
    const double piv = tableau_[r][e];
    for (std::size_t j = 0; j < cols_; ++j) tableau_[r][j] /= piv;
    rhs_[r] /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double factor = tableau_[i][e];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] -= factor * tableau_[r][j];
      tableau_[i][e] = 0.0;  // kill rounding residue in the pivot column
      rhs_[i] -= factor * rhs_[r];
    }
    double factor = obj_[e];
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= factor * tableau_[r][j];
    obj_[e] = 0.0;
    objective_ += factor * rhs_[r];
    basis_[r] = e;
  }

  std::size_t rows_, structural_, cols_;
  double tol_;
  std::size_t max_pivots_;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> rhs_;
  std::vector<double> obj_;
  std::vector<std::size_t> basis_;
  double objective_ = 0.0;
};

}  // namespace yaogame::detail
