// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is
// nonzero if any selected criterion fails.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run only criterion N

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "garp_oracle.h"
#include "rparea/afriat.h"
#include "rparea/area.h"
#include "rparea/bounds.h"
#include "rparea/designs.h"
#include "rparea/errors.h"
#include "rparea/rp_graph.h"
#include "rparea/sampling.h"

#ifndef RPAREA_CLI_PATH
#define RPAREA_CLI_PATH "rparea"
#endif

namespace rparea::acceptance {
namespace {

constexpr std::uint64_t kSeed = 20240101;

// Pinned tolerances and ranges.
constexpr double kTwoGoodTolerance = 0.01;
constexpr double kThreeGoodLo = 0.94, kThreeGoodHi = 0.96;
constexpr double kGoldenSeconds = 5.0;
constexpr std::size_t kOracleDatasets = 10000;
constexpr double kAreaThreshold = 0.9;
constexpr std::size_t kThresholdSlack = 1;
constexpr std::size_t kDispersionSlack = 4;
constexpr double kDispersionLowArea = 0.5;
constexpr double kUnrestrictedFloor = 0.995;
constexpr double kWeakG8Lo = 0.68, kWeakG8Hi = 0.78;
constexpr double kAdditiveG8Lo = 0.61, kAdditiveG8Hi = 0.71;
constexpr double kWeakG4Lo = 0.04, kWeakG4Hi = 0.10;
constexpr double kAdditiveG4Hi = 0.015;
constexpr double kChoiLo = 0.55, kChoiHi = 0.65;
constexpr double kSmpLo = 0.95, kSmpHi = 0.99;
constexpr double kBenchmarkLo = 0.72, kBenchmarkHi = 0.82;
constexpr double kStandardErrors = 3.0;
constexpr double kCarliFloor = 1.0 - 1e-9;
constexpr double kConstantEdgeTolerance = 1e-12;
constexpr double kPotentialTolerance = 1e-12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_seconds;  // 0: no limit stated
  std::function<Outcome()> run;
};

Matrix from_intercepts(std::initializer_list<std::initializer_list<double>> values) {
  Matrix m(values.size(), values.begin()->size());
  std::size_t i = 0;
  for (const auto& row : values) {
    std::size_t j = 0;
    for (double v : row) m(i, j++) = 1.0 / v;
    ++i;
  }
  return m;
}

EstimatorConfig config(std::size_t draws, std::size_t replications, double target = 0.0) {
  EstimatorConfig cfg;
  cfg.max_draws = draws;
  cfg.replications = replications;
  cfg.target_halfwidth = target;
  cfg.seed = kSeed;
  return cfg;
}

// Smallest K on the curve whose mean reaches the threshold, or 0.
std::size_t first_crossing(const std::vector<CurvePoint>& curve, double threshold) {
  for (const auto& p : curve) {
    if (p.estimate.mean >= threshold) return p.goods;
  }
  return 0;
}

std::string curve_summary(const std::vector<CurvePoint>& curve) {
  std::string s;
  for (const auto& p : curve) s += fmt::format(" {}:{:.3f}", p.goods, p.estimate.mean);
  return s;
}

bool within(std::size_t value, std::size_t target, std::size_t slack) {
  return value + slack >= target && value <= target + slack;
}

// --- 1, 2 ------------------------------------------------------------------

Outcome two_good_golden() {
  const AreaEstimate est =
      estimate_area_fixed_prices(from_intercepts({{4, 3}, {3, 4}}), config(100000, 1));
  const double diff = std::abs(est.mean - 40.0 / 49.0);
  return {diff <= kTwoGoodTolerance,
          fmt::format("mean {:.5f}, |mean - 40/49| = {:.5f} (limit {}), draws {}", est.mean,
                      diff, kTwoGoodTolerance, est.total_draws())};
}

Outcome three_good_golden() {
  const AreaEstimate est =
      estimate_area_fixed_prices(from_intercepts({{4, 3, 5}, {3, 4, 2}}), config(100000, 1));
  return {est.mean >= kThreeGoodLo && est.mean <= kThreeGoodHi,
          fmt::format("mean {:.5f} (range [{}, {}]), draws {}", est.mean, kThreeGoodLo,
                      kThreeGoodHi, est.total_draws())};
}

// --- 3 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  RngStream rng(kSeed, 3);
  AfriatSolver solver;
  std::size_t lp_disagree = 0, brute_disagree = 0, brute_checked = 0, violations = 0;
  for (std::size_t n = 0; n < kOracleDatasets; ++n) {
    const std::size_t t = 2 + static_cast<std::size_t>(rng.uniform() * 5);
    const std::size_t k = 2 + static_cast<std::size_t>(rng.uniform() * 4);
    Matrix prices = sample_price_matrix(t, k, PriceDistribution{}, rng);
    Matrix shares(t, k);
    for (std::size_t i = 0; i < t; ++i) sample_simplex(shares.row(i), rng);
    const Dataset d = Dataset::from_shares(std::move(prices), std::move(shares));
    const Matrix e = expenditure_matrix(d);
    const bool garp = check_garp(e, kMonteCarloEdgeTolerance).satisfied;
    violations += !garp;
    lp_disagree += solver.solve(AfriatSystem{e}).feasible != garp;
    if (t <= 5) {
      ++brute_checked;
      brute_disagree += testing::brute_force_garp(e, kMonteCarloEdgeTolerance) != garp;
    }
  }
  return {lp_disagree == 0 && brute_disagree == 0,
          fmt::format("{} datasets ({} violate GARP): LP disagreements {}, brute-force "
                      "disagreements {} of {}",
                      kOracleDatasets, violations, lp_disagree, brute_disagree, brute_checked)};
}

// --- 4, 5 ------------------------------------------------------------------

Outcome threshold_reproduction() {
  const EstimatorConfig cfg = config(2000, 10);
  std::vector<std::size_t> grid10(15), grid20(23);
  std::iota(grid10.begin(), grid10.end(), 2);
  std::iota(grid20.begin(), grid20.end(), 2);
  const auto c10 = area_curve(grid10, 10, PriceDistribution{}, cfg);
  const auto c20 = area_curve(grid20, 20, PriceDistribution{}, cfg);
  const std::size_t k10 = first_crossing(c10, kAreaThreshold);
  const std::size_t k20 = first_crossing(c20, kAreaThreshold);
  return {within(k10, 9, kThresholdSlack) && within(k20, 13, kThresholdSlack),
          fmt::format("T=10 first K with Area >= 0.9: {} (target 9 +/- 1); T=20: {} (target 13 "
                      "+/- 1); T=10 curve{}",
                      k10, k20, curve_summary(c10))};
}

Outcome dispersion_effect() {
  const EstimatorConfig cfg = config(2000, 10);
  std::vector<std::size_t> grid;
  for (std::size_t k = 10; k <= 50; k += 4) grid.push_back(k);
  const auto curve = area_curve(grid, 25, PriceDistribution{0.0, 0.5}, cfg);
  double at14 = -1.0;
  for (const auto& p : curve) {
    if (p.goods == 14) at14 = p.estimate.mean;
  }
  const std::size_t k = first_crossing(curve, kAreaThreshold);
  return {at14 >= 0.0 && at14 < kDispersionLowArea && within(k, 42, kDispersionSlack),
          fmt::format("Area(K=14) = {:.3f} (< {}); first K with Area >= 0.9: {} (target 42 +/- "
                      "4); curve{}",
                      at14, kDispersionLowArea, k, curve_summary(curve))};
}

// --- 6 ---------------------------------------------------------------------

Outcome separability_goldens() {
  const EstimatorConfig cfg = config(250, 5);
  SeparabilityConfig sep;
  sep.partitions_per_replication = 20;
  sep.group_size = 8;
  const SeparabilityEstimate g8 = estimate_separability_areas(24, 10, PriceDistribution{}, sep, cfg);
  sep.group_size = 4;
  const SeparabilityEstimate g4 = estimate_separability_areas(24, 10, PriceDistribution{}, sep, cfg);
  const auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  const bool pass = g8.unrestricted.mean >= kUnrestrictedFloor &&
                    in(g8.weak.mean, kWeakG8Lo, kWeakG8Hi) &&
                    in(g8.additive.mean, kAdditiveG8Lo, kAdditiveG8Hi) &&
                    in(g4.weak.mean, kWeakG4Lo, kWeakG4Hi) && g4.additive.mean <= kAdditiveG4Hi;
  return {pass,
          fmt::format("unrestricted {:.4f} (>= {}); G=8 weak {:.4f} [{}, {}], additive {:.4f} "
                      "[{}, {}]; G=4 weak {:.4f} [{}, {}], additive {:.4f} (<= {})",
                      g8.unrestricted.mean, kUnrestrictedFloor, g8.weak.mean, kWeakG8Lo,
                      kWeakG8Hi, g8.additive.mean, kAdditiveG8Lo, kAdditiveG8Hi, g4.weak.mean,
                      kWeakG4Lo, kWeakG4Hi, g4.additive.mean, kAdditiveG4Hi)};
}

// --- 7 ---------------------------------------------------------------------

Outcome design_goldens() {
  const EstimatorConfig cfg = config(10000, 30, 0.005);
  const AreaEstimate choi = estimate_design_area(ChoiConfig{20, 25}, cfg);
  const AreaEstimate smp =
      estimate_design_area(SmpConfig{10, 20, PriceDistribution{}}, SmpProtocol::kBudgets, cfg);
  const AreaEstimate bench = estimate_area(10, 20, PriceDistribution{}, cfg);
  const auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  return {in(choi.mean, kChoiLo, kChoiHi) && in(smp.mean, kSmpLo, kSmpHi) &&
              in(bench.mean, kBenchmarkLo, kBenchmarkHi),
          fmt::format("Choi K=20 T=25 {:.4f} [{}, {}]; SMP K=10 T=20 {:.4f} [{}, {}]; "
                      "benchmark {:.4f} (ci {:.4f}-{:.4f}) [{}, {}]",
                      choi.mean, kChoiLo, kChoiHi, smp.mean, kSmpLo, kSmpHi, bench.mean,
                      bench.ci_lo, bench.ci_hi, kBenchmarkLo, kBenchmarkHi)};
}

// --- 8 ---------------------------------------------------------------------

// Positive vector with dispersion, rescaled so that its mean is `carli`.
std::vector<double> ratio_vector(std::size_t k, double spread, double carli, RngStream& rng) {
  std::vector<double> rho(k);
  for (double& v : rho) v = std::exp(spread * rng.normal());
  const double mean = std::accumulate(rho.begin(), rho.end(), 0.0) / static_cast<double>(k);
  for (double& v : rho) v *= carli / mean;
  return rho;
}

// Two-level prices: each r_i^k is c^(+1/2) or c^(-1/2).
Matrix two_level_prices(std::size_t t, std::size_t k, double c, RngStream& rng) {
  Matrix r(t, k);
  for (double& v : r.data()) v = std::pow(c, rng.uniform() < 0.5 ? -0.5 : 0.5);
  return r;
}

Outcome bound_domination() {
  RngStream rng(kSeed, 8);
  constexpr std::size_t kConfigs = 100;
  constexpr std::size_t kDraws = 100000;
  constexpr std::array<double, 3> kDeltas = {0.05, 0.1, 0.2};
  std::size_t edge_fail = 0, concentration_fail = 0;
  double worst_edge_gap = -1.0, worst_conc_gap = -1.0;
  std::vector<double> w;
  for (std::size_t c = 0; c < kConfigs; ++c) {
    const std::size_t k = 5 + static_cast<std::size_t>(rng.uniform() * 56);
    const double carli = 1.05 + 0.45 * rng.uniform();
    const double spread = 0.2 + 0.8 * rng.uniform();
    const auto rho = ratio_vector(k, spread, carli, rng);
    const double a = *std::min_element(rho.begin(), rho.end());
    const double b = *std::max_element(rho.begin(), rho.end());
    const double edge_bound = edge_probability_bound(carli, a, b, k).value;
    std::size_t below_one = 0;
    std::array<std::size_t, kDeltas.size()> below_mean{};
    w.resize(k);
    for (std::size_t n = 0; n < kDraws; ++n) {
      sample_simplex(w, rng);
      double e = 0.0;
      for (std::size_t g = 0; g < k; ++g) e += rho[g] * w[g];
      below_one += e <= 1.0;
      for (std::size_t d = 0; d < kDeltas.size(); ++d) below_mean[d] += e < carli - kDeltas[d];
    }
    const auto exceeds = [&](std::size_t hits, double bound, double& worst) {
      const double p = static_cast<double>(hits) / kDraws;
      const double se = std::sqrt(p * (1.0 - p) / kDraws);
      worst = std::max(worst, p - bound);
      return p > bound + kStandardErrors * se;
    };
    edge_fail += exceeds(below_one, edge_bound, worst_edge_gap);
    for (std::size_t d = 0; d < kDeltas.size(); ++d) {
      const double bound = coefficient_concentration_bound(kDeltas[d], a, b, k).value;
      concentration_fail += exceeds(below_mean[d], bound, worst_conc_gap);
    }
  }

  // Area lower bound against fixed-price estimates, certified per draw.
  std::size_t positive = 0, sandwich_fail = 0, points = 0;
  std::string worst;
  double worst_margin = std::numeric_limits<double>::infinity();
  const auto check_point = [&](const Matrix& prices, const std::string& label) {
    ++points;
    const PriceRatioTensor rho(prices);
    const RatioBounds ab = certify_ratio_bounds(rho);
    const CycleCertificate eps = certify_cycle_max_margin(rho);
    if (!(eps.value > 0.0) || !(ab.a_hat < 1.0 && 1.0 < ab.b_hat)) return;
    const BoundParams p{prices.cols(), prices.rows(), ab.a_hat, ab.b_hat, eps.value, 0.0};
    const double bound = graph_area_bound(p).value;
    if (bound <= 0.0) return;
    ++positive;
    EstimatorConfig cfg = config(20000, 1);
    cfg.seed = kSeed + points;
    const AreaEstimate est = estimate_area_fixed_prices(prices, cfg);
    const double margin = est.mean + kStandardErrors * est.standard_error - bound;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst = fmt::format("{} bound {:.4f} vs Area {:.4f}", label, bound, est.mean);
    }
    sandwich_fail += margin < 0.0;
  };
  for (std::size_t t : {2, 3, 4, 5}) {
    for (std::size_t k : {100, 200, 400, 800}) {
      for (double c : {4.0, 9.0}) {
        check_point(two_level_prices(t, k, c, rng), fmt::format("two-level T={} K={} c={}", t, k, c));
      }
      // Log-normal draws from the estimator grid: the bound is vacuous there.
      check_point(sample_price_matrix(t, k, PriceDistribution{}, rng),
                  fmt::format("lognormal T={} K={}", t, k));
    }
  }
  return {edge_fail == 0 && concentration_fail == 0 && sandwich_fail == 0 && positive > 0,
          fmt::format("edge bound exceeded in {} of {} configs (max p - bound {:.4f}); "
                      "concentration exceeded in {} of {} (max {:.4f}); area bound above "
                      "estimate + 3 SE at {} of {} positive points ({} grid points; tightest: {})",
                      edge_fail, kConfigs, worst_edge_gap, concentration_fail,
                      kConfigs * kDeltas.size(), worst_conc_gap, sandwich_fail, positive, points,
                      worst)};
}

// --- 9 ---------------------------------------------------------------------

Outcome carli_cycle_inequality() {
  RngStream rng(kSeed, 9);
  constexpr std::size_t kCycles = 10000;
  std::size_t below = 0, constant_off = 0, strict_missing = 0, constant_cycles = 0;
  double min_product = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < kCycles; ++n) {
    const std::size_t len = 2 + static_cast<std::size_t>(rng.uniform() * 6);
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 12);
    const bool constant = n % 10 == 0;
    std::vector<std::vector<double>> edges(len, std::vector<double>(k));
    std::vector<double> running(k, 1.0);
    for (std::size_t l = 0; l + 1 < len; ++l) {
      const double level = std::exp(rng.normal());
      for (std::size_t g = 0; g < k; ++g) {
        edges[l][g] = constant ? level : std::exp(0.1 + rng.normal());
        running[g] *= edges[l][g];
      }
    }
    for (std::size_t g = 0; g < k; ++g) edges[len - 1][g] = 1.0 / running[g];
    bool all_constant = true;
    for (const auto& edge : edges) {
      for (double v : edge) all_constant = all_constant && std::abs(v - edge[0]) <= 1e-12 * edge[0];
    }
    const CarliCycle c = carli_cycle_check(edges);
    min_product = std::min(min_product, c.product);
    below += c.product < kCarliFloor;
    if (all_constant) {
      ++constant_cycles;
      constant_off += std::abs(c.product - 1.0) > kConstantEdgeTolerance;
    } else {
      strict_missing += !(c.product > 1.0 + kConstantEdgeTolerance);
    }
  }
  return {below == 0 && constant_off == 0 && strict_missing == 0,
          fmt::format("{} cycles: min product {:.12f}, below 1 - 1e-9: {}; constant-edge cycles "
                      "{} with |product - 1| > 1e-12: {}; non-constant cycles without strict "
                      "excess: {}",
                      kCycles, min_product, below, constant_cycles, constant_off, strict_missing)};
}

// --- 10 --------------------------------------------------------------------

Outcome exact_combinatorics() {
  const auto c10 = enumerate_cycles(10);
  std::size_t mismatches = 0;
  std::string counts;
  for (std::size_t t = 2; t <= 6; ++t) {
    const std::size_t brute = testing::brute_force_cycle_count(t);
    counts += fmt::format(" T={}:{}", t, brute);
    mismatches += enumerate_cycles(t) != brute;
  }
  return {c10 == 1112073 && mismatches == 0,
          fmt::format("enumerate_cycles(10) = {}; brute-force mismatches for T <= 6: {} "
                      "(counts{})",
                      c10.str(), mismatches, counts)};
}

// --- 11 --------------------------------------------------------------------

Outcome potentials_witness() {
  RngStream rng(kSeed, 11);
  constexpr std::size_t kMatrices = 100;
  constexpr std::size_t kPerturbations = 100;
  std::size_t tightened_fail = 0, perturbed_fail = 0, uncertified = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < kMatrices; ++n) {
    const std::size_t t = 2 + static_cast<std::size_t>(rng.uniform() * 5);
    const std::size_t k = 2 + static_cast<std::size_t>(rng.uniform() * 9);
    const PriceRatioTensor rho(sample_price_matrix(t, k, PriceDistribution{}, rng));
    const Matrix& carli = rho.carli();
    const double eta = certify_cycle_sum_margin(carli).value;
    if (!(eta > 0.0)) {
      ++uncertified;
      continue;
    }
    const double eta0 = eta / (2.0 * static_cast<double>(t));
    const auto u = strict_feasibility_potentials(carli, eta);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        tightened_fail += u[j] - u[i] > carli(i, j) - 1.0 - eta0 + kPotentialTolerance;
      }
    }
    const std::vector<double> lambda(t, 1.0);
    for (std::size_t p = 0; p < kPerturbations; ++p) {
      AfriatSystem system{Matrix(t, t, 1.0)};
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
          if (i != j) system.coefficients(i, j) = carli(i, j) + eta0 * (2.0 * rng.uniform() - 1.0);
        }
      }
      const double slack = afriat_min_slack(system, u, lambda);
      min_slack = std::min(min_slack, slack);
      perturbed_fail += slack < -kPotentialTolerance;
    }
  }
  return {tightened_fail == 0 && perturbed_fail == 0 && uncertified == 0,
          fmt::format("{} Carli matrices ({} uncertified): tightened-constraint failures {}; "
                      "perturbed systems infeasible at lambda = 1: {} of {} (min slack {:.3e})",
                      kMatrices, uncertified, tightened_fail, perturbed_fail,
                      kMatrices * kPerturbations, min_slack)};
}

// --- 12 --------------------------------------------------------------------

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome determinism() {
  const std::string cli = RPAREA_CLI_PATH;
  const std::vector<std::string> runs = {
      "curve -T 10,20 -K 2:16 --replications 10 --draws 2000 --target-halfwidth 0",
      "curve -T 25 -K 10:50:4 --sigma 0.5 --replications 10 --draws 500",
      "separability -K 24 -T 10 -G 4,8 --partitions 4 --replications 3 --draws 100",
      "design choi -K 20 -T 25 --replications 6 --draws 2000",
      "design smp -K 10 -T 20 --replications 6 --draws 2000 --benchmark",
      "design smp -K 10 -T 20 --replications 4 --draws 500 --smp-protocol chained",
      "area -K 2 -T 2 --replications 3 --draws 5000 --format json",
  };
  std::size_t identical = 0;
  std::string failures;
  for (const auto& args : runs) {
    const std::string one = capture(fmt::format("{} --seed {} --threads 1 {}", cli, kSeed, args));
    const std::string many = capture(fmt::format("{} --seed {} --threads 4 {}", cli, kSeed, args));
    if (!one.empty() && one == many) {
      ++identical;
    } else {
      failures += " [" + args + "]";
    }
  }
  return {identical == runs.size(),
          fmt::format("{} of {} CLI runs byte-identical between --threads 1 and 4{}", identical,
                      runs.size(), failures.empty() ? "" : "; differing:" + failures)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "two-good, two-observation golden", kGoldenSeconds, two_good_golden},
      {2, "three-good, two-observation golden", kGoldenSeconds, three_good_golden},
      {3, "GARP / LP / brute-force oracle equivalence", 120.0, oracle_equivalence},
      {4, "Area >= 0.9 thresholds at sigma = 1", 600.0, threshold_reproduction},
      {5, "dispersion effect at sigma = 0.5", 900.0, dispersion_effect},
      {6, "separability goldens", 1800.0, separability_goldens},
      {7, "experimental design goldens", 1200.0, design_goldens},
      {8, "bound domination", 600.0, bound_domination},
      {9, "Carli cycle inequality", 30.0, carli_cycle_inequality},
      {10, "exact cycle combinatorics", 0.0, exact_combinatorics},
      {11, "strict-feasibility potentials witness", 0.0, potentials_witness},
      {12, "determinism across thread counts", 0.0, determinism},
  };
  return all;
}

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_seconds == 0.0 || seconds < c.time_limit_seconds;
    const bool pass = outcome.pass && in_time;
    failed += !pass;
    std::string timing = fmt::format("{:.1f} s", seconds);
    if (c.time_limit_seconds > 0.0) {
      timing += fmt::format(" (limit {:.0f} s{})", c.time_limit_seconds,
                            in_time ? "" : ", EXCEEDED");
    }
    std::cout << fmt::format("criterion {:>2} {} - {}: {} [{}]", c.id, pass ? "PASS" : "FAIL",
                             c.title, outcome.detail, timing)
              << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace rparea::acceptance

int main(int argc, char** argv) { return rparea::acceptance::main(argc, argv); }
