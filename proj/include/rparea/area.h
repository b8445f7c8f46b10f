#ifndef RPAREA_AREA_H_
#define RPAREA_AREA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rparea/afriat.h"
#include "rparea/designs.h"
#include "rparea/matrix.h"
#include "rparea/rp_graph.h"
#include "rparea/sampling.h"

namespace rparea {

// Indicator recorded per share draw.
enum class AreaMode { kGarp, kLp, kSeparabilityWeak, kSeparabilityAdditive };

std::string_view to_string(AreaMode mode);

struct EstimatorConfig {
  std::size_t max_draws = 10000;    // per replication
  std::size_t replications = 20;   // independent price draws
  double ci_level = 0.95;
  // Stop a replication once the Wilson half-width of its running estimate
  // drops to this value (checked every kStoppingBatch draws). 0 disables.
  double target_halfwidth = 0.005;
  std::uint64_t seed = 20240101;
  std::size_t threads = 1;
  double tol_edge = kMonteCarloEdgeTolerance;
  double tol_lp = kDefaultLpTolerance;

  // Throws DomainError unless max_draws >= 100, replications >= 1 and
  // 0 < ci_level < 1.
  void validate() const;
};

inline constexpr std::size_t kStoppingBatch = 100;

struct ReplicationResult {
  double estimate = 0.0;
  std::size_t draws = 0;
};

struct AreaEstimate {
  double mean = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  // Across replications when there are several, binomial otherwise.
  double standard_error = 0.0;
  std::vector<ReplicationResult> per_replication;
  AreaMode mode = AreaMode::kGarp;

  std::size_t total_draws() const;
};

// Wilson score interval for `hits` successes in `n` trials at normal
// quantile z.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};
Interval wilson_interval(std::size_t hits, std::size_t n, double z);

// Replication r at grid point g draws from RngStream(seed,
// derive_stream_id(r, g)). Grid points are the number of goods K for the
// price-drawing estimators and 0 for fixed prices.
AreaEstimate estimate_area(std::size_t goods, std::size_t observations,
                           const PriceDistribution& dist, const EstimatorConfig& cfg,
                           AreaMode mode = AreaMode::kGarp);

// Every replication reuses `prices` (T x K) and draws fresh shares.
AreaEstimate estimate_area_fixed_prices(const Matrix& prices, const EstimatorConfig& cfg,
                                        AreaMode mode = AreaMode::kGarp);

struct CurvePoint {
  std::size_t goods = 0;
  AreaEstimate estimate;
};

// One estimate per K. Work units over the whole grid share the thread
// pool; each point matches the corresponding estimate_area call exactly.
std::vector<CurvePoint> area_curve(std::span<const std::size_t> goods_grid,
                                   std::size_t observations, const PriceDistribution& dist,
                                   const EstimatorConfig& cfg);

struct SeparabilityConfig {
  std::size_t group_size = 1;
  // Random equal partitions drawn per replication; when false the single
  // contiguous partition is used.
  bool random_partitions = true;
  std::size_t partitions_per_replication = 1;
  AdditiveForm additive_form = AdditiveForm::kGroupNormalised;
};

// The three indicators evaluated on common draws. For each replication the
// prices are drawn once, then partitions_per_replication partitions each
// receive max_draws share draws (no adaptive stopping). Per draw,
//   weak     = GARP on the full data and within every group
//   additive = weak and the additive-separability LP is feasible
// so additive <= weak <= unrestricted holds draw by draw.
struct SeparabilityEstimate {
  AreaEstimate unrestricted;
  AreaEstimate weak;
  AreaEstimate additive;
};

SeparabilityEstimate estimate_separability_areas(std::size_t goods, std::size_t observations,
                                                 const PriceDistribution& dist,
                                                 const SeparabilityConfig& sep,
                                                 const EstimatorConfig& cfg);

// `mode` must be kSeparabilityWeak or kSeparabilityAdditive.
AreaEstimate estimate_separability_area(std::size_t goods, std::size_t observations,
                                        const PriceDistribution& dist,
                                        const SeparabilityConfig& sep, AreaMode mode,
                                        const EstimatorConfig& cfg);

// Within-group GARP: edge i -> j iff r_i^g . x_j^g <= r_i^g . x_i^g.
bool group_garp_satisfied(const Matrix& prices, const Matrix& quantities,
                          std::span<const std::size_t> group, double tol_edge);

// Each replication draws one set of Choi budgets and estimates its Area.
AreaEstimate estimate_design_area(const ChoiConfig& design, const EstimatorConfig& cfg);

enum class SmpProtocol {
  // Each replication draws one SMP price path (bundles chosen with uniform
  // shares) and estimates the Area of those budgets with fresh shares.
  kBudgets,
  // Each draw generates a complete chained dataset; the Area is the
  // fraction of datasets satisfying GARP.
  kChained,
};

std::string_view to_string(SmpProtocol protocol);
SmpProtocol parse_smp_protocol(std::string_view name);

AreaEstimate estimate_design_area(const SmpConfig& design, SmpProtocol protocol,
                                  const EstimatorConfig& cfg);

}  // namespace rparea

#endif  // RPAREA_AREA_H_
