#include "rparea/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rparea/errors.h"

namespace rparea {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;
constexpr double kRatioTie = 1e-12;
constexpr std::size_t kPivotsPerConstraint = 50;

}  // namespace

// Dictionary layout: rows 0..m-1 read  x_B(i) = rhs_i - sum_j a_ij x_N(j),
// row m reads  z = rhs_m - sum_j d_j x_N(j)  (maximised). Column n is the
// artificial variable, column n + 1 the right-hand side.
void FeasibilitySolver::pivot(std::size_t row, std::size_t col) {
  const std::size_t rhs = n_ + 1;
  const double inv = 1.0 / at(row, col);
  nonzero_.clear();
  for (std::size_t j = 0; j <= rhs; ++j) {
    if (j == col) continue;
    at(row, j) *= inv;
    if (at(row, j) != 0.0) nonzero_.push_back(j);
  }
  at(row, col) = inv;
  for (std::size_t i = 0; i <= m_; ++i) {
    if (i == row) continue;
    const double factor = at(i, col);
    if (factor == 0.0) continue;
    double* dst = table_.data() + i * width_;
    const double* src = table_.data() + row * width_;
    for (std::size_t j : nonzero_) dst[j] -= factor * src[j];
    dst[col] = -factor * inv;
  }
  std::swap(basic_[row], nonbasic_[col]);
}

FeasibilityResult FeasibilitySolver::solve(const Matrix& a, std::span<const double> b,
                                           double tol) {
  m_ = a.rows();
  n_ = a.cols();
  width_ = n_ + 2;
  const std::size_t artificial = n_;
  const std::size_t rhs = n_ + 1;

  FeasibilityResult result;
  result.x.assign(n_, 0.0);

  std::size_t worst = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    if (b[i] < b[worst]) worst = i;
  }
  if (m_ == 0 || b[worst] >= 0.0) {
    result.feasible = true;
    return result;
  }

  table_.assign((m_ + 1) * width_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) at(i, j) = a(i, j);
    at(i, artificial) = -1.0;
    at(i, rhs) = b[i];
  }
  at(m_, artificial) = 1.0;  // maximise -t

  nonbasic_.resize(n_ + 1);
  for (std::size_t j = 0; j <= n_; ++j) nonbasic_[j] = j;
  basic_.resize(m_);
  for (std::size_t i = 0; i < m_; ++i) basic_[i] = n_ + 1 + i;

  pivot(worst, artificial);
  ++result.pivots;

  const std::size_t cap = kPivotsPerConstraint * m_;
  while (true) {
    // t has left the basis: it sits at zero and the system is feasible.
    if (std::find(nonbasic_.begin(), nonbasic_.end(), artificial) != nonbasic_.end()) {
      break;
    }

    // Bland: smallest-index improving column.
    std::size_t col = width_;
    for (std::size_t j = 0; j <= n_; ++j) {
      if (at(m_, j) < -kCostEps && (col == width_ || nonbasic_[j] < nonbasic_[col])) {
        col = j;
      }
    }
    if (col == width_) break;

    std::size_t row = m_;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double coef = at(i, col);
      if (coef <= kPivotEps) continue;
      const double ratio = at(i, rhs) / coef;
      // Ties go to the smaller index, except that the artificial always wins:
      // once it leaves, the search stops, so cycling cannot follow.
      const bool tie_wins = row != m_ && ratio <= best + kRatioTie &&
                            basic_[row] != artificial &&
                            (basic_[i] == artificial || basic_[i] < basic_[row]);
      if (ratio < best - kRatioTie || tie_wins) {
        best = ratio;
        row = i;
      }
    }
    if (row == m_) {
      // Cannot happen for a bounded auxiliary objective; treat as a stall.
      throw SolverError("phase-1 simplex found an unbounded direction");
    }
    pivot(row, col);
    if (++result.pivots > cap) {
      throw SolverError("phase-1 simplex exceeded " + std::to_string(cap) + " pivots");
    }
  }

  double t = 0.0;
  for (std::size_t i = 0; i < m_; ++i) {
    const std::size_t var = basic_[i];
    if (var < n_) result.x[var] = std::max(0.0, at(i, rhs));
    if (var == artificial) t = std::max(0.0, at(i, rhs));
  }
  result.infeasibility = t;
  result.feasible = t <= tol;
  return result;
}

}  // namespace rparea
