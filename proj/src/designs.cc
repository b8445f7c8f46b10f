#include "rparea/designs.h"

#include <cmath>
#include <string>
#include <vector>

#include "rparea/errors.h"

namespace rparea {

std::string_view to_string(ChoiRule rule) {
  return rule == ChoiRule::kAll ? "all" : "any";
}

ChoiRule parse_choi_rule(std::string_view name) {
  if (name == "all") return ChoiRule::kAll;
  if (name == "any") return ChoiRule::kAny;
  throw DomainError("unknown Choi rule '" + std::string(name) + "' (expected all|any)");
}

void ChoiConfig::validate() const {
  if (goods < 2) throw DomainError("Choi design needs K >= 2");
  if (observations < 1) throw DomainError("Choi design needs T >= 1");
  if (!(a > 0.0 && a < b) || !std::isfinite(b)) {
    throw DomainError("Choi intercept range needs 0 < a < b");
  }
  if (rule == ChoiRule::kAny && !(a < b / 2.0)) {
    throw DomainError("Choi 'any' rule needs a < b/2");
  }
}

bool choi_accepts(std::span<const double> intercepts, double b, ChoiRule rule) {
  const double half = b / 2.0;
  std::size_t inner = 0;
  for (double v : intercepts) inner += v <= half ? 1 : 0;
  if (rule == ChoiRule::kAll) return inner < intercepts.size();
  return inner == 0;
}

Matrix choi_design(const ChoiConfig& cfg, RngStream& rng) {
  cfg.validate();
  Matrix prices(cfg.observations, cfg.goods);
  std::vector<double> intercepts(cfg.goods);
  for (std::size_t t = 0; t < cfg.observations; ++t) {
    std::size_t attempts = 0;
    do {
      if (++attempts > kChoiMaxAttempts) {
        throw DomainError("Choi design rejected " + std::to_string(kChoiMaxAttempts) +
                          " budgets in a row");
      }
      for (double& v : intercepts) v = cfg.a + (cfg.b - cfg.a) * rng.uniform();
    } while (!choi_accepts(intercepts, cfg.b, cfg.rule));
    for (std::size_t k = 0; k < cfg.goods; ++k) prices(t, k) = 1.0 / intercepts[k];
  }
  return prices;
}

void SmpConfig::validate() const {
  if (goods < 2) throw DomainError("SMP design needs K >= 2");
  if (observations < 2) throw DomainError("SMP design needs T >= 2");
  dist.validate();
}

Dataset smp_design(const SmpConfig& cfg, RngStream& rng) {
  cfg.validate();
  const std::size_t t_max = cfg.observations;
  const std::size_t k_max = cfg.goods;
  Matrix prices(t_max, k_max);
  Matrix shares(t_max, k_max);
  std::vector<double> previous(k_max);
  for (std::size_t t = 0; t < t_max; ++t) {
    auto r = prices.row(t);
    sample_prices(r, cfg.dist, rng);
    if (t > 0) {
      double spend = 0.0;
      for (std::size_t k = 0; k < k_max; ++k) spend += r[k] * previous[k];
      for (double& v : r) v /= spend;
    }
    auto w = shares.row(t);
    sample_simplex(w, rng);
    for (std::size_t k = 0; k < k_max; ++k) previous[k] = w[k] / r[k];
  }
  return Dataset::from_shares(std::move(prices), std::move(shares));
}

}  // namespace rparea
