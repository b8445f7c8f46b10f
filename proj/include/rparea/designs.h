#ifndef RPAREA_DESIGNS_H_
#define RPAREA_DESIGNS_H_

#include <cstddef>
#include <span>
#include <string_view>

#include "rparea/dataset.h"
#include "rparea/matrix.h"
#include "rparea/sampling.h"

namespace rparea {

// Which intercepts must fall in the inner half [a, b/2] for a Choi budget to
// be discarded.
enum class ChoiRule {
  kAll,  // discard iff every intercept is <= b/2
  kAny,  // discard iff some intercept is <= b/2
};

std::string_view to_string(ChoiRule rule);
ChoiRule parse_choi_rule(std::string_view name);

// Budgets with intercepts 1 / r[k] drawn uniformly on [a, b], rejecting
// those whose intercepts lie in [a, b/2] under `rule`. Only b / a affects
// the Area of the resulting design.
struct ChoiConfig {
  std::size_t goods = 2;
  std::size_t observations = 2;
  double a = 10.0;
  double b = 100.0;
  ChoiRule rule = ChoiRule::kAll;

  void validate() const;
};

inline constexpr std::size_t kChoiMaxAttempts = 1000000;

// Whether a budget with these intercepts survives the rejection rule.
bool choi_accepts(std::span<const double> intercepts, double b, ChoiRule rule);

// T x K normalised prices. Throws DomainError after kChoiMaxAttempts
// consecutive rejections.
Matrix choi_design(const ChoiConfig& cfg, RngStream& rng);

// Sequential design: each new price vector is drawn from `dist` and scaled
// so that the previous bundle lies exactly on the new budget line; the
// bundle is then chosen with uniform shares.
struct SmpConfig {
  std::size_t goods = 2;
  std::size_t observations = 2;
  PriceDistribution dist;

  void validate() const;
};

// Full chained dataset: r_t . x_t = 1 and r_t . x_{t-1} = 1.
Dataset smp_design(const SmpConfig& cfg, RngStream& rng);

}  // namespace rparea

#endif  // RPAREA_DESIGNS_H_
