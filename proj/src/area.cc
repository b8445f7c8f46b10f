#include "rparea/area.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "rparea/errors.h"
#include "rparea/parallel.h"
#include "rparea/partition.h"

namespace rparea {
namespace {

struct Tally {
  std::size_t hits = 0;
  std::size_t draws = 0;
};

double normal_quantile(double ci_level) {
  return boost::math::quantile(boost::math::normal_distribution<double>(),
                               0.5 + ci_level / 2.0);
}

// Fresh uniform shares on fixed budgets, with everything the indicators
// need precomputed per draw.
class ShareDraws {
 public:
  explicit ShareDraws(const Matrix& prices)
      : prices_(prices),
        inverse_(reciprocal(prices)),
        shares_(prices.rows(), prices.cols()),
        quantities_(prices.rows(), prices.cols()) {}

  void draw(RngStream& rng) {
    for (std::size_t t = 0; t < prices_.rows(); ++t) {
      auto w = shares_.row(t);
      sample_simplex(w, rng);
      auto x = quantities_.row(t);
      auto inv = inverse_.row(t);
      for (std::size_t k = 0; k < w.size(); ++k) x[k] = w[k] * inv[k];
    }
    expenditure_matrix(prices_, quantities_, expenditure_);
  }

  bool garp(double tol_edge) { return kernel_.satisfied(expenditure_, tol_edge); }

  bool lp(double tol_lp) {
    system_.coefficients = expenditure_;
    return solver_.solve(system_, tol_lp).feasible;
  }

  bool groups_garp(const PartitionSpec& partition, double tol_edge) {
    for (const auto& group : partition.groups()) {
      if (!group_garp_satisfied(prices_, quantities_, group, tol_edge, group_e_, kernel_)) {
        return false;
      }
    }
    return true;
  }

  bool additive(const PartitionSpec& partition, AdditiveForm form, double tol_lp) {
    return solver_.solve_additive(prices_, quantities_, partition, form, 1.0, tol_lp).feasible;
  }

  static bool group_garp_satisfied(const Matrix& prices, const Matrix& quantities,
                                   std::span<const std::size_t> group, double tol_edge,
                                   Matrix& e, GarpKernel& kernel) {
    const std::size_t t = prices.rows();
    if (e.rows() != t) e = Matrix(t, t);
    std::vector<double> own(t);
    for (std::size_t i = 0; i < t; ++i) {
      double sum = 0.0;
      for (std::size_t k : group) sum += prices(i, k) * quantities(i, k);
      own[i] = sum;
    }
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (i == j) {
          e(i, j) = 1.0;
          continue;
        }
        double cross = 0.0;
        for (std::size_t k : group) cross += prices(i, k) * quantities(j, k);
        if (own[i] > 0.0) {
          e(i, j) = cross / own[i];
        } else {
          // Nothing spent in the group: only a zero bundle is revealed, weakly.
          e(i, j) = cross > 0.0 ? HUGE_VAL : 1.0;
        }
      }
    }
    return kernel.satisfied(e, tol_edge);
  }

 private:
  const Matrix& prices_;
  Matrix inverse_;
  Matrix shares_;
  Matrix quantities_;
  Matrix expenditure_;
  Matrix group_e_;
  GarpKernel kernel_;
  AfriatSolver solver_;
  AfriatSystem system_;
};

double wilson_halfwidth(std::size_t hits, std::size_t n, double z) {
  const Interval ci = wilson_interval(hits, n, z);
  return (ci.hi - ci.lo) / 2.0;
}

// Runs `indicator` until max_draws or the Wilson stopping rule fires.
template <typename Indicator>
Tally run_adaptive(const EstimatorConfig& cfg, double z, Indicator&& indicator) {
  Tally tally;
  while (tally.draws < cfg.max_draws) {
    const std::size_t end = std::min(tally.draws + kStoppingBatch, cfg.max_draws);
    for (; tally.draws < end; ++tally.draws) tally.hits += indicator() ? 1 : 0;
    if (cfg.target_halfwidth > 0.0 &&
        wilson_halfwidth(tally.hits, tally.draws, z) <= cfg.target_halfwidth) {
      break;
    }
  }
  return tally;
}

AreaEstimate aggregate(const std::vector<Tally>& tallies, const EstimatorConfig& cfg,
                       AreaMode mode) {
  AreaEstimate out;
  out.mode = mode;
  const double z = normal_quantile(cfg.ci_level);
  double sum = 0.0;
  for (const Tally& t : tallies) {
    const double p = t.draws == 0 ? 1.0 : static_cast<double>(t.hits) / static_cast<double>(t.draws);
    out.per_replication.push_back({p, t.draws});
    sum += p;
  }
  const double r = static_cast<double>(tallies.size());
  out.mean = sum / r;
  if (tallies.size() == 1) {
    const Tally& t = tallies.front();
    if (t.draws == 0) {
      out.ci_lo = out.ci_hi = out.mean;
      return out;
    }
    const Interval ci = wilson_interval(t.hits, t.draws, z);
    out.ci_lo = std::min(ci.lo, out.mean);
    out.ci_hi = std::max(ci.hi, out.mean);
    out.standard_error =
        std::sqrt(out.mean * (1.0 - out.mean) / static_cast<double>(t.draws));
    return out;
  }
  double ss = 0.0;
  for (const auto& rep : out.per_replication) ss += (rep.estimate - out.mean) * (rep.estimate - out.mean);
  out.standard_error = std::sqrt(ss / (r - 1.0) / r);
  out.ci_lo = std::clamp(out.mean - z * out.standard_error, 0.0, out.mean);
  out.ci_hi = std::clamp(out.mean + z * out.standard_error, out.mean, 1.0);
  return out;
}

AreaEstimate trivially_one(const EstimatorConfig& cfg, AreaMode mode) {
  std::vector<Tally> tallies(cfg.replications);
  return aggregate(tallies, cfg, mode);
}

// Indicator for a single draw in `mode`.
bool indicator(ShareDraws& draws, AreaMode mode, const EstimatorConfig& cfg) {
  switch (mode) {
    case AreaMode::kGarp:
      return draws.garp(cfg.tol_edge);
    case AreaMode::kLp:
      return draws.lp(cfg.tol_lp);
    default:
      throw DomainError("separability modes need a partition; use estimate_separability_area");
  }
}

Tally fixed_price_replication(const Matrix& prices, RngStream& rng, AreaMode mode,
                              const EstimatorConfig& cfg, double z) {
  ShareDraws draws(prices);
  return run_adaptive(cfg, z, [&] {
    draws.draw(rng);
    return indicator(draws, mode, cfg);
  });
}

}  // namespace

std::string_view to_string(AreaMode mode) {
  switch (mode) {
    case AreaMode::kGarp:
      return "garp";
    case AreaMode::kLp:
      return "lp";
    case AreaMode::kSeparabilityWeak:
      return "separability-weak";
    case AreaMode::kSeparabilityAdditive:
      return "separability-additive";
  }
  return "unknown";
}

void EstimatorConfig::validate() const {
  if (max_draws < 100) throw DomainError("max_draws must be at least 100");
  if (replications < 1) throw DomainError("replications must be at least 1");
  if (!(ci_level > 0.0 && ci_level < 1.0)) throw DomainError("ci_level must lie in (0, 1)");
  if (!(target_halfwidth >= 0.0)) throw DomainError("target_halfwidth must be non-negative");
  if (!(tol_edge >= 0.0) || !(tol_lp >= 0.0)) throw DomainError("tolerances must be non-negative");
}

std::size_t AreaEstimate::total_draws() const {
  std::size_t n = 0;
  for (const auto& rep : per_replication) n += rep.draws;
  return n;
}

Interval wilson_interval(std::size_t hits, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

AreaEstimate estimate_area(std::size_t goods, std::size_t observations,
                           const PriceDistribution& dist, const EstimatorConfig& cfg,
                           AreaMode mode) {
  if (mode == AreaMode::kGarp) {
    const std::size_t grid[] = {goods};
    return std::move(area_curve(grid, observations, dist, cfg).front().estimate);
  }
  cfg.validate();
  dist.validate();
  if (observations < 2) return trivially_one(cfg, mode);
  const double z = normal_quantile(cfg.ci_level);
  std::vector<Tally> tallies(cfg.replications);
  parallel_for(cfg.replications, cfg.threads, [&](std::size_t rep) {
    RngStream rng(cfg.seed, derive_stream_id(rep, goods));
    const Matrix prices = sample_price_matrix(observations, goods, dist, rng);
    tallies[rep] = fixed_price_replication(prices, rng, mode, cfg, z);
  });
  return aggregate(tallies, cfg, mode);
}

AreaEstimate estimate_area_fixed_prices(const Matrix& prices, const EstimatorConfig& cfg,
                                        AreaMode mode) {
  cfg.validate();
  if (prices.rows() < 2) return trivially_one(cfg, mode);
  for (double r : prices.data()) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("prices must be positive and finite");
  }
  const double z = normal_quantile(cfg.ci_level);
  std::vector<Tally> tallies(cfg.replications);
  parallel_for(cfg.replications, cfg.threads, [&](std::size_t rep) {
    RngStream rng(cfg.seed, derive_stream_id(rep, 0));
    tallies[rep] = fixed_price_replication(prices, rng, mode, cfg, z);
  });
  return aggregate(tallies, cfg, mode);
}

std::vector<CurvePoint> area_curve(std::span<const std::size_t> goods_grid,
                                   std::size_t observations, const PriceDistribution& dist,
                                   const EstimatorConfig& cfg) {
  cfg.validate();
  dist.validate();
  for (std::size_t k : goods_grid) {
    if (k < 2) throw DomainError("every K on the grid must be at least 2");
  }
  std::vector<CurvePoint> out;
  if (observations < 2) {
    for (std::size_t k : goods_grid) out.push_back({k, trivially_one(cfg, AreaMode::kGarp)});
    return out;
  }
  const double z = normal_quantile(cfg.ci_level);
  const std::size_t reps = cfg.replications;
  std::vector<Tally> tallies(goods_grid.size() * reps);
  parallel_for(tallies.size(), cfg.threads, [&](std::size_t unit) {
    const std::size_t k = goods_grid[unit / reps];
    const std::size_t rep = unit % reps;
    RngStream rng(cfg.seed, derive_stream_id(rep, k));
    const Matrix prices = sample_price_matrix(observations, k, dist, rng);
    tallies[unit] = fixed_price_replication(prices, rng, AreaMode::kGarp, cfg, z);
  });
  for (std::size_t p = 0; p < goods_grid.size(); ++p) {
    std::vector<Tally> slice(tallies.begin() + static_cast<std::ptrdiff_t>(p * reps),
                             tallies.begin() + static_cast<std::ptrdiff_t>((p + 1) * reps));
    out.push_back({goods_grid[p], aggregate(slice, cfg, AreaMode::kGarp)});
  }
  return out;
}

bool group_garp_satisfied(const Matrix& prices, const Matrix& quantities,
                          std::span<const std::size_t> group, double tol_edge) {
  Matrix e;
  GarpKernel kernel;
  return ShareDraws::group_garp_satisfied(prices, quantities, group, tol_edge, e, kernel);
}

SeparabilityEstimate estimate_separability_areas(std::size_t goods, std::size_t observations,
                                                 const PriceDistribution& dist,
                                                 const SeparabilityConfig& sep,
                                                 const EstimatorConfig& cfg) {
  cfg.validate();
  dist.validate();
  if (goods < 2) throw DomainError("separability needs K >= 2");
  if (sep.group_size == 0 || goods % sep.group_size != 0) {
    throw DomainError("group size must divide K");
  }
  if (sep.partitions_per_replication == 0) {
    throw DomainError("at least one partition per replication is required");
  }
  if (observations < 2) {
    return {trivially_one(cfg, AreaMode::kGarp), trivially_one(cfg, AreaMode::kSeparabilityWeak),
            trivially_one(cfg, AreaMode::kSeparabilityAdditive)};
  }
  const std::size_t reps = cfg.replications;
  std::vector<Tally> full(reps), weak(reps), additive(reps);
  parallel_for(reps, cfg.threads, [&](std::size_t rep) {
    RngStream rng(cfg.seed, derive_stream_id(rep, goods));
    const Matrix prices = sample_price_matrix(observations, goods, dist, rng);
    ShareDraws draws(prices);
    for (std::size_t p = 0; p < sep.partitions_per_replication; ++p) {
      const PartitionSpec partition =
          sep.random_partitions ? PartitionSpec::random_equal(goods, sep.group_size, rng)
                                : PartitionSpec::contiguous(goods, sep.group_size);
      for (std::size_t d = 0; d < cfg.max_draws; ++d) {
        draws.draw(rng);
        const bool g = draws.garp(cfg.tol_edge);
        const bool w = g && draws.groups_garp(partition, cfg.tol_edge);
        const bool a = w && draws.additive(partition, sep.additive_form, cfg.tol_lp);
        full[rep].hits += g;
        weak[rep].hits += w;
        additive[rep].hits += a;
      }
    }
    const std::size_t n = sep.partitions_per_replication * cfg.max_draws;
    full[rep].draws = weak[rep].draws = additive[rep].draws = n;
  });
  return {aggregate(full, cfg, AreaMode::kGarp), aggregate(weak, cfg, AreaMode::kSeparabilityWeak),
          aggregate(additive, cfg, AreaMode::kSeparabilityAdditive)};
}

AreaEstimate estimate_separability_area(std::size_t goods, std::size_t observations,
                                        const PriceDistribution& dist,
                                        const SeparabilityConfig& sep, AreaMode mode,
                                        const EstimatorConfig& cfg) {
  SeparabilityEstimate all = estimate_separability_areas(goods, observations, dist, sep, cfg);
  if (mode == AreaMode::kSeparabilityWeak) return std::move(all.weak);
  if (mode == AreaMode::kSeparabilityAdditive) return std::move(all.additive);
  throw DomainError("separability estimates are weak or additive");
}

AreaEstimate estimate_design_area(const ChoiConfig& design, const EstimatorConfig& cfg) {
  cfg.validate();
  design.validate();
  const double z = normal_quantile(cfg.ci_level);
  std::vector<Tally> tallies(cfg.replications);
  parallel_for(cfg.replications, cfg.threads, [&](std::size_t rep) {
    RngStream rng(cfg.seed, derive_stream_id(rep, design.goods));
    const Matrix prices = choi_design(design, rng);
    if (prices.rows() < 2) {
      tallies[rep] = {};
      return;
    }
    tallies[rep] = fixed_price_replication(prices, rng, AreaMode::kGarp, cfg, z);
  });
  return aggregate(tallies, cfg, AreaMode::kGarp);
}

std::string_view to_string(SmpProtocol protocol) {
  return protocol == SmpProtocol::kBudgets ? "budgets" : "chained";
}

SmpProtocol parse_smp_protocol(std::string_view name) {
  if (name == "budgets") return SmpProtocol::kBudgets;
  if (name == "chained") return SmpProtocol::kChained;
  throw DomainError("unknown SMP protocol '" + std::string(name) +
                    "' (expected budgets|chained)");
}

AreaEstimate estimate_design_area(const SmpConfig& design, SmpProtocol protocol,
                                  const EstimatorConfig& cfg) {
  cfg.validate();
  design.validate();
  const double z = normal_quantile(cfg.ci_level);
  std::vector<Tally> tallies(cfg.replications);
  parallel_for(cfg.replications, cfg.threads, [&](std::size_t rep) {
    RngStream rng(cfg.seed, derive_stream_id(rep, design.goods));
    if (protocol == SmpProtocol::kBudgets) {
      const Dataset path = smp_design(design, rng);
      tallies[rep] = fixed_price_replication(path.prices(), rng, AreaMode::kGarp, cfg, z);
      return;
    }
    GarpKernel kernel;
    tallies[rep] = run_adaptive(cfg, z, [&] {
      const Dataset chained = smp_design(design, rng);
      return kernel.satisfied(expenditure_matrix(chained), cfg.tol_edge);
    });
  });
  return aggregate(tallies, cfg, AreaMode::kGarp);
}

}  // namespace rparea
