#ifndef RPAREA_BOUNDS_H_
#define RPAREA_BOUNDS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "rparea/dataset.h"
#include "rparea/matrix.h"
#include "rparea/sampling.h"

namespace rparea {

// Inputs to the closed-form area bounds.
//   a, b     bounds on every off-diagonal price ratio
//   epsilon  every cycle has an edge with Carli index >= 1 + epsilon
//   eta      every cycle has sum of (Carli index - 1) >= eta
struct BoundParams {
  std::size_t goods = 0;
  std::size_t observations = 0;
  double a = 0.0;
  double b = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
};

// A probability bound together with its unclamped value.
struct Bound {
  double value = 0.0;
  double raw = 0.0;
};

struct CarliCycle {
  double product = 1.0;   // prod_l mean_k rho_l^k
  double max_mean = 1.0;  // max_l mean_k rho_l^k
};

// Product and maximum of edge Carli indices along a cycle. The edge ratio
// vectors must telescope (prod_l rho_l^k = 1 within 1e-9 for every k);
// throws DomainError otherwise.
CarliCycle carli_cycle_check(std::span<const std::vector<double>> edges);

// P(rho . w <= 1) <= exp(-K (carli - 1)^2 / (4 (b - a)^2)) for uniform w.
// Throws DomainError unless carli > 1 and a < b.
Bound edge_probability_bound(double carli, double a, double b, std::size_t goods);

// P(e_ij < carli_ij - delta) <= exp(-K delta^2 / (4 (b - a + delta)^2)).
Bound coefficient_concentration_bound(double delta, double a, double b, std::size_t goods);

// Rate constants of the two area bounds.
double graph_bound_rate(const BoundParams& params);  // epsilon^2 / (4 (b-a)^2)
double lp_bound_rate(const BoundParams& params);     // eta0^2 / (4 (b-a+eta0)^2)

// Union bound over directed cycles: A_K >= 1 - C_T exp(-c1 K).
Bound graph_area_bound(const BoundParams& params);
// Union bound over LP coefficients: A_K >= 1 - T (T-1) exp(-c2 K).
Bound lp_area_bound(const BoundParams& params);

// Empirical [min, max] of all off-diagonal price ratios.
struct RatioBounds {
  double a_hat = 0.0;
  double b_hat = 0.0;
};
RatioBounds certify_ratio_bounds(const PriceRatioTensor& ratios);

enum class CertificateMode { kExhaustive, kSampled };

struct CycleCertificate {
  double value = 0.0;
  CertificateMode mode = CertificateMode::kExhaustive;
  std::size_t cycles_examined = 0;
  std::vector<std::size_t> worst_cycle;  // 0-based, without the repeated start
};

inline constexpr std::size_t kExhaustiveCycleCap = 8;
inline constexpr std::size_t kSampledCycles = 10000;

// epsilon_hat = min over cycles of (max edge Carli index - 1). Exhaustive;
// throws DomainError when T exceeds `cap`.
CycleCertificate certify_cycle_max_margin(const PriceRatioTensor& ratios,
                                          std::size_t cap = kExhaustiveCycleCap);
// eta_hat = min over cycles of sum (Carli index - 1). Exhaustive; throws
// DomainError when T exceeds `cap`.
CycleCertificate certify_cycle_sum_margin(const Matrix& carli,
                                          std::size_t cap = kExhaustiveCycleCap);

// Minimum over `cycles` uniformly sampled cycles. An upper estimate of the
// exhaustive value.
CycleCertificate sample_cycle_max_margin(const PriceRatioTensor& ratios, std::size_t cycles,
                                         RngStream& rng);
CycleCertificate sample_cycle_sum_margin(const Matrix& carli, std::size_t cycles,
                                         RngStream& rng);

// Exhaustive below or at the cap, sampled above it.
CycleCertificate certify_cycle_max_margin_auto(const PriceRatioTensor& ratios,
                                               RngStream& rng);
CycleCertificate certify_cycle_sum_margin_auto(const Matrix& carli, RngStream& rng);

}  // namespace rparea

#endif  // RPAREA_BOUNDS_H_
