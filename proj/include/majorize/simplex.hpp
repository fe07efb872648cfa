#ifndef MAJORIZE_SIMPLEX_HPP
#define MAJORIZE_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/rational.hpp"

namespace majorize {

/// Outcome of deciding whether {t >= 0 : A t = r} is nonempty.
struct FeasibilityResult {
  bool feasible = false;
  /// A feasible t (when feasible).
  std::vector<Rational> solution;
  /// Farkas ray y (when infeasible): yᵀA <= 0 componentwise and yᵀr > 0.
  std::vector<Rational> farkas;
};

/// Exact phase-1 simplex on A t = r, t >= 0 with Bland's anti-cycling rule.
///
/// One artificial variable per row; the auxiliary problem minimises their sum.
/// A zero optimum yields a feasible basis. A positive optimum yields the
/// optimal dual of the auxiliary problem, which is a Farkas certificate for
/// the original system.
class PhaseOneSimplex {
public:
  /// `columns[j]` is column j of A; every column has rhs.size() entries.
  PhaseOneSimplex(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& rhs)
      : rows_(rhs.size()), cols_(columns.size()) {
    require(rows_ >= 1, "simplex: no constraints");
    const std::size_t width = cols_ + rows_ + 1;
    tableau_.assign(rows_, std::vector<Rational>(width, Rational(0)));
    sign_.assign(rows_, 1);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rhs[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < cols_; ++j) {
        require(columns[j].size() == rows_, "simplex: ragged column");
        tableau_[i][j] = sign_[i] < 0 ? Rational(-columns[j][i]) : columns[j][i];
      }
      tableau_[i][cols_ + i] = 1;
      tableau_[i][width - 1] = sign_[i] < 0 ? Rational(-rhs[i]) : rhs[i];
      basis_[i] = cols_ + i;
    }
    reduced_.assign(width, Rational(0));
    for (std::size_t j = 0; j < width; ++j) {
      if (j >= cols_ && j < cols_ + rows_) continue;
      Rational s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += tableau_[i][j];
      // Last slot holds the negated objective value.
      reduced_[j] = -s;
    }
  }

  FeasibilityResult solve() {
    const std::size_t rhs_col = cols_ + rows_;
    for (;;) {
      std::size_t entering = rhs_col;
      for (std::size_t j = 0; j < rhs_col; ++j)
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == rhs_col) break;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& coef = tableau_[i][entering];
        if (coef <= 0) continue;
        Rational ratio = tableau_[i][rhs_col] / coef;
        if (leaving == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      ensure(leaving < rows_, "simplex: auxiliary problem unbounded");
      pivot(leaving, entering);
    }

    FeasibilityResult result;
    const Rational objective = -reduced_[rhs_col];
    if (objective == 0) {
      result.feasible = true;
      result.solution.assign(cols_, Rational(0));
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < cols_) result.solution[basis_[i]] = tableau_[i][rhs_col];
    } else {
      ensure(objective > 0, "simplex: negative auxiliary optimum");
      result.farkas.resize(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        Rational y = 1 - reduced_[cols_ + i];
        result.farkas[i] = sign_[i] < 0 ? Rational(-y) : y;
      }
    }
    return result;
  }

private:
  void pivot(std::size_t row, std::size_t col) {
    auto& prow = tableau_[row];
    const Rational pivot_value = prow[col];
    for (auto& v : prow)
      if (v != 0) v /= pivot_value;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || tableau_[i][col] == 0) continue;
      eliminate(tableau_[i], prow, col);
    }
    if (reduced_[col] != 0) eliminate(reduced_, prow, col);
    basis_[row] = col;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow, std::size_t col) {
    const Rational factor = target[col];
    for (std::size_t j = 0; j < target.size(); ++j)
      if (prow[j] != 0) target[j] -= factor * prow[j];
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

inline FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& columns,
                                           const std::vector<Rational>& rhs) {
  return PhaseOneSimplex(columns, rhs).solve();
}

}  // namespace majorize

#endif  // MAJORIZE_SIMPLEX_HPP
