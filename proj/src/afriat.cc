#include "rparea/afriat.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rparea/errors.h"
#include "rparea/rp_graph.h"

namespace rparea {
namespace {

double pair_coefficient(const AfriatSystem& system, std::size_t i, std::size_t j) {
  const Matrix& e = system.coefficients;
  return system.orientation == AfriatOrientation::kEvaluatorMultiplier ? e(i, j) - 1.0
                                                                       : e(j, i) - 1.0;
}

void reshape(Matrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() == rows && m.cols() == cols) {
    std::fill(m.data().begin(), m.data().end(), 0.0);
  } else {
    m = Matrix(rows, cols);
  }
}

}  // namespace

void AfriatSystem::validate() const {
  const Matrix& e = coefficients;
  if (e.rows() != e.cols() || e.rows() == 0) {
    throw DomainError("Afriat coefficient matrix must be square and nonempty");
  }
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (std::abs(e(i, i) - 1.0) > 1e-12) {
      throw DomainError("Afriat coefficient matrix needs a unit diagonal");
    }
  }
  if (!(lambda_floor > 0.0)) throw DomainError("lambda floor must be positive");
}

LpWitness AfriatSolver::solve(const AfriatSystem& system, double tol_lp) {
  system.validate();
  const std::size_t t = system.coefficients.rows();
  const double floor = system.lambda_floor;

  // Variables: U_0..U_{T-1} >= 0 (the system is translation invariant) and
  // the excess lambda_i - floor >= 0.
  reshape(a_, t * (t - 1), 2 * t);
  b_.assign(t * (t - 1), 0.0);
  std::size_t row = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      const double c = pair_coefficient(system, i, j);
      a_(row, j) += 1.0;
      a_(row, i) -= 1.0;
      a_(row, t + i) = -c;
      b_[row] = c * floor;
      ++row;
    }
  }

  const FeasibilityResult lp = lp_.solve(a_, b_, tol_lp);
  LpWitness out;
  out.feasible = lp.feasible;
  out.infeasibility = lp.infeasibility;
  out.marginal = (lp.infeasibility <= tol_lp) != (lp.infeasibility <= kMarginalLpTolerance);
  out.utility.assign(lp.x.begin(), lp.x.begin() + static_cast<std::ptrdiff_t>(t));
  out.lambda.resize(t);
  for (std::size_t i = 0; i < t; ++i) out.lambda[i] = floor + lp.x[t + i];
  return out;
}

GroupedWitness AfriatSolver::solve_additive(const Matrix& prices, const Matrix& quantities,
                                            const PartitionSpec& partition,
                                            AdditiveForm form, double lambda_floor,
                                            double tol_lp) {
  const std::size_t t = prices.rows();
  const std::size_t groups = partition.group_count();
  if (partition.goods() != prices.cols()) {
    throw DomainError("partition and dataset disagree on the number of goods");
  }
  if (!(lambda_floor > 0.0)) throw DomainError("lambda floor must be positive");

  const std::size_t lambda_offset = groups * t;
  reshape(a_, groups * t * (t - 1), lambda_offset + t);
  b_.assign(groups * t * (t - 1), 0.0);
  reshape(group_spend_, t, t);

  std::size_t row = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const auto& goods = partition.group(g);
    // group_spend_(j, i) = r_j^g . x_i^g
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t i = 0; i < t; ++i) {
        double sum = 0.0;
        for (std::size_t k : goods) sum += prices(j, k) * quantities(i, k);
        group_spend_(j, i) = sum;
      }
    }
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        const double own = group_spend_(j, j);
        const double cross = group_spend_(j, i);
        double c = 0.0;
        if (form == AdditiveForm::kExpenditure) {
          c = cross - own;
        } else if (own > 0.0) {
          c = cross / own - 1.0;
        } else if (cross > 0.0) {
          // No own spending in the group: the multiplier is unbounded and the
          // constraint is slack.
          continue;
        }
        a_(row, g * t + i) += 1.0;
        a_(row, g * t + j) -= 1.0;
        a_(row, lambda_offset + j) = -c;
        b_[row] = c * lambda_floor;
        ++row;
      }
    }
  }
  if (row < a_.rows()) {
    Matrix trimmed(row, a_.cols());
    for (std::size_t r = 0; r < row; ++r) {
      std::copy(a_.row(r).begin(), a_.row(r).end(), trimmed.row(r).begin());
    }
    a_ = std::move(trimmed);
    b_.resize(row);
  }

  const FeasibilityResult lp = lp_.solve(a_, b_, tol_lp);
  GroupedWitness out;
  out.feasible = lp.feasible;
  out.infeasibility = lp.infeasibility;
  out.marginal = (lp.infeasibility <= tol_lp) != (lp.infeasibility <= kMarginalLpTolerance);
  out.utility = Matrix(groups, t);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t i = 0; i < t; ++i) out.utility(g, i) = lp.x[g * t + i];
  }
  out.lambda.resize(t);
  for (std::size_t i = 0; i < t; ++i) out.lambda[i] = lambda_floor + lp.x[lambda_offset + i];
  return out;
}

LpWitness solve_afriat(const AfriatSystem& system, double tol_lp) {
  AfriatSolver solver;
  return solver.solve(system, tol_lp);
}

LpWitness solve_afriat(const Dataset& dataset, double tol_lp) {
  return solve_afriat(AfriatSystem{expenditure_matrix(dataset)}, tol_lp);
}

double afriat_min_slack(const AfriatSystem& system, const std::vector<double>& utility,
                        const std::vector<double>& lambda) {
  const std::size_t t = system.coefficients.rows();
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      const double rhs = lambda[i] * pair_coefficient(system, i, j);
      slack = std::min(slack, rhs - (utility[j] - utility[i]));
    }
  }
  return slack;
}

GroupedWitness additive_separability_feasible(const Dataset& dataset,
                                              const PartitionSpec& partition,
                                              AdditiveForm form, double tol_lp) {
  AfriatSolver solver;
  GroupedWitness out = solver.solve_additive(dataset.prices(), dataset.quantities(), partition,
                                             form, 1.0, tol_lp);
  out.feasible = out.feasible && check_garp(dataset).satisfied;
  return out;
}

std::vector<double> strict_feasibility_potentials(const Matrix& carli, double eta) {
  const std::size_t t = carli.rows();
  if (carli.cols() != t || t < 2) {
    throw DomainError("Carli matrix must be square with T >= 2");
  }
  if (!(eta > 0.0)) throw DomainError("cycle-sum margin eta must be positive");
  const double eta0 = eta / (2.0 * static_cast<double>(t));
  const auto d = [&](std::size_t i, std::size_t j) { return carli(i, j) - 1.0 - eta0; };

  std::vector<double> u(t, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> pred(t, t);
  u[0] = 0.0;
  // T - 1 relaxation rounds settle every shortest path; a further update in
  // round T exposes a negative cycle.
  std::size_t culprit = t;
  for (std::size_t round = 0; round < t; ++round) {
    const bool detecting = round + 1 == t;
    const double margin = detecting ? 1e-12 : 0.0;
    bool changed = false;
    for (std::size_t i = 0; i < t; ++i) {
      if (!std::isfinite(u[i])) continue;
      for (std::size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        const double candidate = u[i] + d(i, j);
        if (candidate < u[j] - margin) {
          u[j] = candidate;
          pred[j] = i;
          changed = true;
          if (detecting) culprit = j;
        }
      }
    }
    if (!changed) break;
  }

  if (culprit != t) {
    std::size_t v = culprit;
    for (std::size_t step = 0; step < t && pred[v] != t; ++step) v = pred[v];
    if (pred[v] == t) throw DomainError("negative cycle under tightened coefficients");
    std::vector<std::size_t> cycle{v};
    for (std::size_t w = pred[v]; w != v; w = pred[w]) cycle.push_back(w);
    cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    std::string names;
    for (std::size_t w : cycle) {
      names += (names.empty() ? "" : "->") + std::to_string(w + 1);
    }
    throw DomainError("negative cycle under tightened coefficients: " + names);
  }
  return u;
}

}  // namespace rparea
