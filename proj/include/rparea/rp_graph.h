#ifndef RPAREA_RP_GRAPH_H_
#define RPAREA_RP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rparea/dataset.h"
#include "rparea/matrix.h"

namespace rparea {

// Edge tolerance for datasets loaded from files, where exact ties on the
// budget hyperplane can occur.
inline constexpr double kFileEdgeTolerance = 1e-9;
// Edge tolerance for sampled shares. Ties are a null event there; the tiny
// band only absorbs rounding when budgets coincide exactly.
inline constexpr double kMonteCarloEdgeTolerance = 1e-12;

// Direct revealed preference over T observations.
//   weak[i][j]    iff e[i][j] <= 1 + tol   (x_i R0 x_j)
//   strict[i][j]  iff e[i][j] <  1 - tol   (x_i P0 x_j)
//   closure       reflexive-transitive closure of weak
struct RpGraph {
  std::size_t size = 0;
  BoolMatrix weak;
  BoolMatrix strict;
  BoolMatrix closure;
};

struct GarpVerdict {
  bool satisfied = true;
  // 0-based cycle (i_1, ..., i_L, i_1): i_1 R i_L through weak edges and
  // i_L P0 i_1. Present iff !satisfied.
  std::optional<std::vector<std::size_t>> witness;
};

RpGraph build_graph(const Matrix& expenditure, double tol_edge);

GarpVerdict check_garp(const Matrix& expenditure, double tol_edge);
GarpVerdict check_garp(const Dataset& dataset, double tol_edge = kFileEdgeTolerance);

// Directed cycle on >= 2 distinct vertices among the weak edges.
bool has_directed_cycle(const RpGraph& graph);
bool has_directed_cycle(const BoolMatrix& adjacency);

// Number of directed cycles on T labelled vertices:
// sum_{L=2}^{T} C(T, L) (L - 1)!. Throws DomainError for T < 2.
boost::multiprecision::cpp_int enumerate_cycles(std::size_t t);

// Allocation-free GARP test for Monte Carlo loops. Equivalent to
// check_garp(e, tol).satisfied, without witness extraction.
class GarpKernel {
 public:
  bool satisfied(const Matrix& expenditure, double tol_edge);

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> reach_;
};

}  // namespace rparea

#endif  // RPAREA_RP_GRAPH_H_
