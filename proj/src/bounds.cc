#include "rparea/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rparea/errors.h"
#include "rparea/rp_graph.h"

namespace rparea {
namespace {

constexpr double kTelescopeTolerance = 1e-9;

void require_ratio_range(double a, double b) {
  if (!(a > 0.0) || !(a < b) || !std::isfinite(b)) {
    throw DomainError("price-ratio bounds need 0 < a < b");
  }
}

// Both area bounds assume every cycle carries a ratio on either side of one.
void validate_area_params(const BoundParams& p) {
  require_ratio_range(p.a, p.b);
  if (!(p.a < 1.0 && 1.0 < p.b)) {
    throw DomainError("cycle margin assumptions require a < 1 < b");
  }
  if (p.observations < 2) throw DomainError("area bounds need T >= 2");
  if (p.goods < 1) throw DomainError("area bounds need K >= 1");
}

// Visits every directed simple cycle of length >= 2 once, as the vertex
// sequence starting at its smallest vertex. `visit` returns nothing.
template <typename Visit>
void for_each_cycle(std::size_t t, Visit&& visit) {
  std::vector<std::size_t> path;
  std::vector<bool> used(t, false);
  path.reserve(t);
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (path.size() >= 2) visit(std::span<const std::size_t>(path));
    for (std::size_t v = start + 1; v < t; ++v) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      self(self, start);
      path.pop_back();
      used[v] = false;
    }
  };
  for (std::size_t s = 0; s + 1 < t; ++s) {
    path.assign(1, s);
    used[s] = true;
    extend(extend, s);
    used[s] = false;
  }
}

double cycle_max_margin(const Matrix& carli, std::span<const std::size_t> cycle) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < cycle.size(); ++l) {
    worst = std::max(worst, carli(cycle[l], cycle[(l + 1) % cycle.size()]));
  }
  return worst - 1.0;
}

double cycle_sum_margin(const Matrix& carli, std::span<const std::size_t> cycle) {
  double sum = 0.0;
  for (std::size_t l = 0; l < cycle.size(); ++l) {
    sum += carli(cycle[l], cycle[(l + 1) % cycle.size()]) - 1.0;
  }
  return sum;
}

template <typename Margin>
CycleCertificate exhaustive(const Matrix& carli, std::size_t cap, Margin margin) {
  const std::size_t t = carli.rows();
  if (t < 2) throw DomainError("cycle certificates need T >= 2");
  if (t > cap) {
    throw DomainError("exhaustive cycle enumeration is capped at T = " +
                      std::to_string(cap) + "; use the sampled certificate");
  }
  CycleCertificate out;
  out.value = std::numeric_limits<double>::infinity();
  for_each_cycle(t, [&](std::span<const std::size_t> cycle) {
    ++out.cycles_examined;
    const double m = margin(carli, cycle);
    if (m < out.value) {
      out.value = m;
      out.worst_cycle.assign(cycle.begin(), cycle.end());
    }
  });
  return out;
}

template <typename Margin>
CycleCertificate sampled(const Matrix& carli, std::size_t cycles, RngStream& rng,
                         Margin margin) {
  const std::size_t t = carli.rows();
  if (t < 2) throw DomainError("cycle certificates need T >= 2");
  if (cycles == 0) throw DomainError("sampled certificate needs at least one cycle");
  CycleCertificate out;
  out.mode = CertificateMode::kSampled;
  out.value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> order(t);
  for (std::size_t n = 0; n < cycles; ++n) {
    // Length uniform on [2, T], then a uniform ordered choice of vertices.
    const std::size_t len =
        2 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(t - 1));
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t pick =
          i + static_cast<std::size_t>(rng.uniform() * static_cast<double>(t - i));
      std::swap(order[i], order[std::min(pick, t - 1)]);
    }
    const std::span<const std::size_t> cycle(order.data(), len);
    ++out.cycles_examined;
    const double m = margin(carli, cycle);
    if (m < out.value) {
      out.value = m;
      out.worst_cycle.assign(cycle.begin(), cycle.end());
    }
  }
  return out;
}

}  // namespace

CarliCycle carli_cycle_check(std::span<const std::vector<double>> edges) {
  if (edges.size() < 2) throw DomainError("a cycle needs at least two edges");
  const std::size_t k = edges.front().size();
  if (k == 0) throw DomainError("edge ratio vectors must be nonempty");
  for (const auto& edge : edges) {
    if (edge.size() != k) throw DomainError("edge ratio vectors differ in length");
  }
  for (std::size_t good = 0; good < k; ++good) {
    double product = 1.0;
    for (const auto& edge : edges) product *= edge[good];
    if (std::abs(product - 1.0) > kTelescopeTolerance) {
      throw DomainError("edge ratios do not telescope around the cycle");
    }
  }
  CarliCycle out;
  out.max_mean = -std::numeric_limits<double>::infinity();
  for (const auto& edge : edges) {
    const double mean = carli_index(edge);
    out.product *= mean;
    out.max_mean = std::max(out.max_mean, mean);
  }
  // AM-GM per edge plus telescoping: the product of means cannot drop below 1.
  if (out.product < 1.0 - kTelescopeTolerance) {
    throw DomainError("product of edge Carli indices fell below one");
  }
  return out;
}

Bound edge_probability_bound(double carli, double a, double b, std::size_t goods) {
  require_ratio_range(a, b);
  if (!(carli > 1.0)) throw DomainError("edge bound needs a Carli index above one");
  const double gap = carli - 1.0;
  const double v = std::exp(-static_cast<double>(goods) * gap * gap / (4.0 * (b - a) * (b - a)));
  return {v, v};
}

Bound coefficient_concentration_bound(double delta, double a, double b, std::size_t goods) {
  require_ratio_range(a, b);
  if (!(delta > 0.0)) throw DomainError("concentration bound needs delta > 0");
  const double span = b - a + delta;
  const double v = std::exp(-static_cast<double>(goods) * delta * delta / (4.0 * span * span));
  return {v, v};
}

double graph_bound_rate(const BoundParams& p) {
  validate_area_params(p);
  if (!(p.epsilon > 0.0)) throw DomainError("graph area bound needs epsilon > 0");
  return p.epsilon * p.epsilon / (4.0 * (p.b - p.a) * (p.b - p.a));
}

double lp_bound_rate(const BoundParams& p) {
  validate_area_params(p);
  if (!(p.eta > 0.0)) throw DomainError("LP area bound needs eta > 0");
  const double eta0 = p.eta / (2.0 * static_cast<double>(p.observations));
  const double span = p.b - p.a + eta0;
  return eta0 * eta0 / (4.0 * span * span);
}

Bound graph_area_bound(const BoundParams& p) {
  const double c1 = graph_bound_rate(p);
  // C_T overflows a double near T = 170; work with its logarithm.
  const auto cycles = enumerate_cycles(p.observations);
  const double log_cycles = std::log(cycles.convert_to<double>());
  const double raw = 1.0 - std::exp(log_cycles - c1 * static_cast<double>(p.goods));
  return {std::clamp(raw, 0.0, 1.0), raw};
}

Bound lp_area_bound(const BoundParams& p) {
  const double c2 = lp_bound_rate(p);
  const double t = static_cast<double>(p.observations);
  const double raw = 1.0 - t * (t - 1.0) * std::exp(-c2 * static_cast<double>(p.goods));
  return {std::clamp(raw, 0.0, 1.0), raw};
}

RatioBounds certify_ratio_bounds(const PriceRatioTensor& ratios) {
  const std::size_t t = ratios.observations();
  if (t < 2) throw DomainError("ratio bounds need T >= 2");
  RatioBounds out{std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      for (double rho : ratios.edge(i, j)) {
        out.a_hat = std::min(out.a_hat, rho);
        out.b_hat = std::max(out.b_hat, rho);
      }
    }
  }
  return out;
}

CycleCertificate certify_cycle_max_margin(const PriceRatioTensor& ratios, std::size_t cap) {
  return exhaustive(ratios.carli(), cap, cycle_max_margin);
}

CycleCertificate certify_cycle_sum_margin(const Matrix& carli, std::size_t cap) {
  if (carli.rows() != carli.cols()) throw DomainError("Carli matrix must be square");
  return exhaustive(carli, cap, cycle_sum_margin);
}

CycleCertificate sample_cycle_max_margin(const PriceRatioTensor& ratios, std::size_t cycles,
                                         RngStream& rng) {
  return sampled(ratios.carli(), cycles, rng, cycle_max_margin);
}

CycleCertificate sample_cycle_sum_margin(const Matrix& carli, std::size_t cycles,
                                         RngStream& rng) {
  if (carli.rows() != carli.cols()) throw DomainError("Carli matrix must be square");
  return sampled(carli, cycles, rng, cycle_sum_margin);
}

CycleCertificate certify_cycle_max_margin_auto(const PriceRatioTensor& ratios,
                                               RngStream& rng) {
  if (ratios.observations() <= kExhaustiveCycleCap) return certify_cycle_max_margin(ratios);
  return sample_cycle_max_margin(ratios, kSampledCycles, rng);
}

CycleCertificate certify_cycle_sum_margin_auto(const Matrix& carli, RngStream& rng) {
  if (carli.rows() <= kExhaustiveCycleCap) return certify_cycle_sum_margin(carli);
  return sample_cycle_sum_margin(carli, kSampledCycles, rng);
}

}  // namespace rparea
