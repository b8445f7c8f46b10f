#ifndef RPAREA_AFRIAT_H_
#define RPAREA_AFRIAT_H_

#include <cstddef>
#include <vector>

#include "rparea/dataset.h"
#include "rparea/matrix.h"
#include "rparea/partition.h"
#include "rparea/simplex.h"

namespace rparea {

inline constexpr double kDefaultLpTolerance = 1e-8;
// A verdict that changes between kDefaultLpTolerance and this looser
// tolerance is reported as marginal.
inline constexpr double kMarginalLpTolerance = 1e-6;

// Which multiplier scales the constraint for the ordered pair (i, j).
enum class AfriatOrientation {
  // U_j - U_i <= lambda_i (e_ij - 1): the observation whose prices evaluate
  // the bundle carries the multiplier. Equivalent to GARP.
  kEvaluatorMultiplier,
  // U_j - U_i <= lambda_i (e_ji - 1). Kept for comparison only.
  kTransposed,
};

// Afriat inequalities in normalised form over the T x T coefficient matrix
// e (unit diagonal). Multipliers are bounded below by lambda_floor; the
// system is homogeneous, so any positive floor is lossless.
struct AfriatSystem {
  Matrix coefficients;
  double lambda_floor = 1.0;
  AfriatOrientation orientation = AfriatOrientation::kEvaluatorMultiplier;

  // Throws DomainError if e is not square with unit diagonal or the floor
  // is not positive.
  void validate() const;
};

struct LpWitness {
  bool feasible = false;
  // Set when the verdict at kDefaultLpTolerance differs from the verdict at
  // kMarginalLpTolerance.
  bool marginal = false;
  double infeasibility = 0.0;
  // The solver's point (relaxed by `infeasibility` when infeasible).
  std::vector<double> utility;
  std::vector<double> lambda;
};

// Additive separability: one utility number per (group, observation) and a
// common multiplier per observation,
//   u_i^g <= u_j^g + lambda_j c_ji^g   for all i != j, g.
enum class AdditiveForm {
  // c_ji^g = r_j^g . x_i^g / (r_j^g . x_j^g) - 1: within-group coefficients
  // normalised by the group's own spending, as in the single-group system.
  // The group spending acts as a per-group rescaling of lambda_j, so this
  // system alone does not imply GARP on the full data.
  kGroupNormalised,
  // c_ji^g = r_j^g . x_i^g - r_j^g . x_j^g.
  kExpenditure,
};

struct GroupedWitness {
  bool feasible = false;
  bool marginal = false;
  double infeasibility = 0.0;
  Matrix utility;  // group_count x T
  std::vector<double> lambda;
};

// Owns reusable LP working storage. Not thread-safe; build one per worker.
class AfriatSolver {
 public:
  LpWitness solve(const AfriatSystem& system, double tol_lp = kDefaultLpTolerance);

  // `prices` and `quantities` are T x K. Shares need not sum to one within
  // groups.
  GroupedWitness solve_additive(const Matrix& prices, const Matrix& quantities,
                                const PartitionSpec& partition, AdditiveForm form,
                                double lambda_floor = 1.0,
                                double tol_lp = kDefaultLpTolerance);

 private:
  FeasibilitySolver lp_;
  Matrix a_;
  std::vector<double> b_;
  Matrix group_spend_;
};

LpWitness solve_afriat(const AfriatSystem& system, double tol_lp = kDefaultLpTolerance);
LpWitness solve_afriat(const Dataset& dataset, double tol_lp = kDefaultLpTolerance);

// Smallest slack rhs - lhs over all T(T-1) constraints of `system` at the
// point (utility, lambda). Non-negative iff the point satisfies the system.
double afriat_min_slack(const AfriatSystem& system, const std::vector<double>& utility,
                        const std::vector<double>& lambda);

// Feasible iff the additive system is feasible and the full data satisfy
// GARP (file tolerance). The second condition only matters for
// kGroupNormalised, whose system does not imply it.
GroupedWitness additive_separability_feasible(
    const Dataset& dataset, const PartitionSpec& partition,
    AdditiveForm form = AdditiveForm::kGroupNormalised,
    double tol_lp = kDefaultLpTolerance);

// Potentials with uniform slack for the mean-coefficient system.
//
// With eta0 = eta / (2T) and d_ij = carli_ij - 1 - eta0, returns U with
// U_0 = 0 and U_m the minimum of sum d over paths 0 -> m, computed by T - 1
// rounds of Bellman-Ford relaxation. The result satisfies
// U_j - U_i <= d_ij for all i != j. Throws DomainError naming the cycle if
// d admits a negative cycle.
std::vector<double> strict_feasibility_potentials(const Matrix& carli, double eta);

}  // namespace rparea

#endif  // RPAREA_AFRIAT_H_
