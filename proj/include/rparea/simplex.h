#ifndef RPAREA_SIMPLEX_H_
#define RPAREA_SIMPLEX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "rparea/matrix.h"

namespace rparea {

struct FeasibilityResult {
  bool feasible = false;
  // Optimal value of the auxiliary problem min t s.t. A x - t <= b, x, t >= 0:
  // the smallest uniform relaxation of the right-hand side that admits a
  // solution.
  double infeasibility = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

// Phase-1 simplex for { x >= 0 : A x <= b } on a dense dictionary.
//
// A single artificial column is subtracted from every row, pivoted into the
// basis on the most violated row, and then driven to its minimum with
// Bland's rule (smallest-index entering and leaving variables), so the
// method terminates on degenerate systems. Exceeding 50 pivots per
// constraint raises SolverError.
//
// The solver keeps its working dictionary between calls to avoid
// reallocation; an instance must not be shared across threads.
class FeasibilitySolver {
 public:
  FeasibilityResult solve(const Matrix& a, std::span<const double> b, double tol);

 private:
  void pivot(std::size_t row, std::size_t col);
  double& at(std::size_t i, std::size_t j) { return table_[i * width_ + j]; }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t width_ = 0;
  std::vector<double> table_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<std::size_t> nonzero_;
};

}  // namespace rparea

#endif  // RPAREA_SIMPLEX_H_
