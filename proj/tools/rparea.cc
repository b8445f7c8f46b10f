// Command-line front end: GARP/LP checks on data files and seeded Monte Carlo
// runs that emit CSV or JSON tables.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "rparea/afriat.h"
#include "rparea/area.h"
#include "rparea/bounds.h"
#include "rparea/dataset_io.h"
#include "rparea/designs.h"
#include "rparea/errors.h"
#include "rparea/rp_graph.h"
#include "table.h"

#ifndef RPAREA_BUILD_ID
#define RPAREA_BUILD_ID "unknown"
#endif

namespace rparea::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitConsistent = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct Globals {
  std::uint64_t seed = 20240101;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "csv";
  double mu = 0.0;
  double sigma = 1.0;
  bool full = false;
};

struct Estimation {
  std::size_t replications = 20;
  std::size_t draws = 10000;
  double target_halfwidth = 0.005;
  double ci_level = 0.95;
};

// Parses "a:b", "a:b:step" or "a,b,c".
std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  const auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw DomainError("bad grid entry '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  try {
    if (text.find(':') != std::string::npos) {
      std::vector<std::size_t> parts;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(number(item));
      if (parts.size() < 2 || parts.size() > 3) throw DomainError("grid ranges are a:b[:step]");
      const std::size_t step = parts.size() == 3 ? parts[2] : 1;
      if (step == 0 || parts[0] > parts[1]) throw DomainError("empty grid range '" + text + "'");
      for (std::size_t v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(number(item));
    }
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse grid '" + text + "'");
  }
  if (out.empty()) throw DomainError("empty grid '" + text + "'");
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse list '" + text + "'");
  }
  if (out.empty()) throw DomainError("empty list '" + text + "'");
  return out;
}

EstimatorConfig estimator(const Globals& g, const Estimation& e) {
  EstimatorConfig cfg;
  cfg.max_draws = e.draws;
  cfg.replications = e.replications;
  cfg.ci_level = e.ci_level;
  cfg.target_halfwidth = e.target_halfwidth;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.validate();
  return cfg;
}

json estimator_json(const EstimatorConfig& cfg) {
  return {{"max_draws", cfg.max_draws},
          {"replications", cfg.replications},
          {"ci_level", cfg.ci_level},
          {"target_halfwidth", cfg.target_halfwidth},
          {"stopping", "wilson half-width, checked every 100 draws"},
          {"interval", "normal across replication means; wilson for one replication"},
          {"tol_edge", cfg.tol_edge},
          {"tol_lp", cfg.tol_lp}};
}

std::string num(double v) { return fmt::format("{:.6f}", v); }

std::vector<std::string> estimate_row(std::size_t k, std::size_t t, double sigma,
                                      const AreaEstimate& est, const EstimatorConfig& cfg) {
  return {std::to_string(k),      std::to_string(t),
          num(sigma),             std::string(to_string(est.mode)),
          num(est.mean),          num(est.ci_lo),
          num(est.ci_hi),         std::to_string(est.total_draws()),
          std::to_string(cfg.replications), std::to_string(cfg.seed)};
}

const std::vector<std::string> kEstimateColumns = {
    "K", "T", "sigma", "mode", "mean", "ci_lo", "ci_hi", "draws", "replications", "seed"};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes the manifest (first) and the table into --out, or the table to
// stdout.
void emit(const Table& table, const Globals& g, const std::string& command, json config,
          const std::vector<std::string>& argv) {
  const auto write = [&](std::ostream& out) {
    if (g.format == "json") {
      write_json(table, out);
    } else {
      write_csv(table, out);
    }
  };
  if (g.out.empty()) {
    write(std::cout);
    return;
  }
  namespace fs = std::filesystem;
  fs::create_directories(g.out);
  const std::string results = "results." + g.format;
  json manifest{{"command_line", argv},
                {"command", command},
                {"config", std::move(config)},
                {"seed", g.seed},
                {"threads", g.threads},
                {"prng", std::string(RngStream::kAlgorithm)},
                {"stream_derivation", "stream_id = mix64(mix64(grid_point) ^ (replication + 1))"},
                {"price_distribution",
                 {{"mu", g.mu}, {"sigma", g.sigma}, {"truncation_q", PriceDistribution{}.truncation_q}}},
                {"timestamp", timestamp()},
                {"build", RPAREA_BUILD_ID},
                {"outputs", {"manifest.json", results}}};
  {
    std::ofstream m(fs::path(g.out) / "manifest.json");
    m << manifest.dump(2) << '\n';
  }
  std::ofstream r(fs::path(g.out) / results);
  write(r);
  if (!r) throw std::runtime_error("failed to write " + (fs::path(g.out) / results).string());
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& x : out) ++x;
  return out;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string method = "both";
  double tol_edge = kFileEdgeTolerance;
  double tol_lp = kDefaultLpTolerance;
};

int run_check(const CheckArgs& a) {
  const Dataset d = read_dataset(a.file);
  json report{{"file", a.file}, {"T", d.observations()}, {"K", d.goods()}};
  if (!d.renormalised_rows().empty()) {
    report["renormalised_rows"] = one_based(d.renormalised_rows());
  }
  bool consistent = true;
  if (a.method == "garp" || a.method == "both") {
    const GarpVerdict v = check_garp(d, a.tol_edge);
    json garp{{"satisfied", v.satisfied}, {"tol_edge", a.tol_edge}};
    if (v.witness) garp["witness"] = one_based(*v.witness);
    report["garp"] = garp;
    consistent = consistent && v.satisfied;
  }
  if (a.method == "lp" || a.method == "both") {
    const LpWitness w = solve_afriat(d, a.tol_lp);
    json lp{{"feasible", w.feasible},
            {"marginal", w.marginal},
            {"infeasibility", w.infeasibility},
            {"tol_lp", a.tol_lp}};
    if (w.feasible) {
      lp["utility"] = w.utility;
      lp["lambda"] = w.lambda;
    }
    report["lp"] = lp;
    consistent = consistent && w.feasible;
  }
  report["consistent"] = consistent;
  std::cout << report.dump(2) << '\n';
  return consistent ? kExitConsistent : kExitViolation;
}

// --- area / curve ----------------------------------------------------------

struct AreaArgs {
  std::size_t goods = 10;
  std::size_t observations = 10;
  std::string mode = "garp";
  std::string prices_file;
  Estimation est;
};

int run_area(const AreaArgs& a, const Globals& g, const std::vector<std::string>& argv) {
  const EstimatorConfig cfg = estimator(g, a.est);
  const AreaMode mode = a.mode == "lp" ? AreaMode::kLp : AreaMode::kGarp;
  Table table{kEstimateColumns, {}};
  json config{{"mode", a.mode}, {"estimator", estimator_json(cfg)}};
  if (!a.prices_file.empty()) {
    const Dataset d = read_dataset(a.prices_file);
    const AreaEstimate est = estimate_area_fixed_prices(d.prices(), cfg, mode);
    table.add(estimate_row(d.goods(), d.observations(), 0.0, est, cfg));
    config["prices_file"] = a.prices_file;
  } else {
    const PriceDistribution dist{g.mu, g.sigma};
    const AreaEstimate est = estimate_area(a.goods, a.observations, dist, cfg, mode);
    table.add(estimate_row(a.goods, a.observations, g.sigma, est, cfg));
    config["K"] = a.goods;
    config["T"] = a.observations;
  }
  emit(table, g, "area", config, argv);
  return 0;
}

struct CurveArgs {
  std::string preset;
  std::string goods = "2:25";
  std::string observations = "10";
  std::string sigmas;
  Estimation est;
};

int run_curve(CurveArgs a, const Globals& g, const std::vector<std::string>& argv,
              bool draws_set, bool replications_set) {
  std::vector<double> sigmas = a.sigmas.empty() ? std::vector<double>{g.sigma}
                                                : parse_list(a.sigmas);
  if (!a.preset.empty()) {
    if (a.preset == "fig3a") {
      a.observations = "10,20,30,40,50";
      a.goods = "2:25";
      sigmas = {1.0};
    } else {
      a.observations = "25";
      a.goods = "2:100";
      sigmas = {0.3, 0.5, 0.7, 0.9, 1.0, 1.1};
    }
    if (!replications_set) a.est.replications = 100;
    if (!draws_set) a.est.draws = g.full ? 50000 : 5000;
  }
  const auto goods = parse_grid(a.goods);
  const auto observations = parse_grid(a.observations);
  const EstimatorConfig cfg = estimator(g, a.est);
  Table table{kEstimateColumns, {}};
  for (double sigma : sigmas) {
    const PriceDistribution dist{g.mu, sigma};
    for (std::size_t t : observations) {
      for (const CurvePoint& p : area_curve(goods, t, dist, cfg)) {
        table.add(estimate_row(p.goods, t, sigma, p.estimate, cfg));
      }
    }
  }
  json config{{"preset", a.preset},
              {"K", goods},
              {"T", observations},
              {"sigma", sigmas},
              {"full", g.full},
              {"estimator", estimator_json(cfg)}};
  emit(table, g, "curve", config, argv);
  return 0;
}

// --- separability ----------------------------------------------------------

struct SeparabilityArgs {
  std::string preset;
  std::size_t goods = 24;
  std::size_t observations = 10;
  std::string group_sizes = "8";
  std::size_t partitions = 20;
  bool fixed_partition = false;
  std::string additive_form = "normalised";
  Estimation est{5, 200, 0.0, 0.95};
};

int run_separability(SeparabilityArgs a, const Globals& g, const std::vector<std::string>& argv,
                     bool draws_set, bool replications_set, bool partitions_set) {
  if (a.preset == "fig4") {
    a.goods = 24;
    a.observations = 10;
    a.group_sizes = "1,2,3,4,6,8,12,24";
    if (!partitions_set) a.partitions = 100;
    if (!replications_set) a.est.replications = 10;
    if (!draws_set) a.est.draws = g.full ? 1000 : 100;
  }
  const EstimatorConfig cfg = estimator(g, a.est);
  const PriceDistribution dist{g.mu, g.sigma};
  Table table{kEstimateColumns, {}};
  table.columns.push_back("group_size");
  table.columns.push_back("partitions");
  for (std::size_t group : parse_grid(a.group_sizes)) {
    SeparabilityConfig sep;
    sep.group_size = group;
    sep.random_partitions = !a.fixed_partition;
    sep.partitions_per_replication = a.fixed_partition ? 1 : a.partitions;
    sep.additive_form = a.additive_form == "expenditure" ? AdditiveForm::kExpenditure
                                                         : AdditiveForm::kGroupNormalised;
    const SeparabilityEstimate est =
        estimate_separability_areas(a.goods, a.observations, dist, sep, cfg);
    for (const AreaEstimate* e : {&est.unrestricted, &est.weak, &est.additive}) {
      auto row = estimate_row(a.goods, a.observations, g.sigma, *e, cfg);
      row.push_back(std::to_string(group));
      row.push_back(std::to_string(sep.partitions_per_replication));
      table.add(std::move(row));
    }
  }
  json config{{"preset", a.preset},
              {"K", a.goods},
              {"T", a.observations},
              {"group_sizes", a.group_sizes},
              {"partitions_per_replication", a.partitions},
              {"random_partitions", !a.fixed_partition},
              {"partition_redraw", "per price replication"},
              {"additive_form", a.additive_form},
              {"estimator", estimator_json(cfg)}};
  emit(table, g, "separability", config, argv);
  return 0;
}

// --- design ----------------------------------------------------------------

struct DesignArgs {
  std::string kind = "choi";
  std::string preset;
  std::string goods = "20";
  std::size_t observations = 25;
  double a = 10.0;
  double b = 100.0;
  std::string choi_rule = "all";
  std::string smp_protocol = "budgets";
  bool benchmark = false;
  std::string emit_dataset;
  Estimation est{100, 50000, 0.005, 0.95};
};

int run_design(DesignArgs a, const Globals& g, const std::vector<std::string>& argv,
               bool draws_set) {
  if (a.preset == "fig5a") {
    a.kind = "choi";
    a.goods = "2:40";
    a.observations = 25;
    a.benchmark = true;
  } else if (a.preset == "fig5b") {
    a.kind = "smp";
    a.goods = "2:25";
    a.observations = 20;
    a.benchmark = true;
  }
  if (!a.preset.empty() && !draws_set) a.est.draws = g.full ? 50000 : 5000;
  const EstimatorConfig cfg = estimator(g, a.est);
  const PriceDistribution dist{g.mu, g.sigma};
  const ChoiRule rule = parse_choi_rule(a.choi_rule);
  const SmpProtocol protocol = parse_smp_protocol(a.smp_protocol);
  const std::string label = a.kind == "choi" ? "choi" : "smp-" + a.smp_protocol;

  Table table{kEstimateColumns, {}};
  table.columns.push_back("design");
  for (std::size_t k : parse_grid(a.goods)) {
    AreaEstimate est;
    if (a.kind == "choi") {
      est = estimate_design_area(ChoiConfig{k, a.observations, a.a, a.b, rule}, cfg);
    } else {
      est = estimate_design_area(SmpConfig{k, a.observations, dist}, protocol, cfg);
    }
    auto row = estimate_row(k, a.observations, a.kind == "choi" ? 0.0 : g.sigma, est, cfg);
    row.push_back(label);
    table.add(std::move(row));
    if (a.benchmark) {
      auto bench = estimate_row(k, a.observations, g.sigma,
                                estimate_area(k, a.observations, dist, cfg), cfg);
      bench.push_back("benchmark");
      table.add(std::move(bench));
    }
  }
  if (!a.emit_dataset.empty()) {
    // One generated design for audit, from replication 0 of the first K.
    const std::size_t k = parse_grid(a.goods).front();
    RngStream rng(g.seed, derive_stream_id(0, k));
    std::ofstream out(a.emit_dataset);
    if (a.kind == "choi") {
      const Matrix prices = choi_design(ChoiConfig{k, a.observations, a.a, a.b, rule}, rng);
      Matrix shares(prices.rows(), prices.cols());
      for (std::size_t t = 0; t < shares.rows(); ++t) sample_simplex(shares.row(t), rng);
      write_dataset_csv(Dataset::from_shares(prices, shares), out);
    } else {
      write_dataset_csv(smp_design(SmpConfig{k, a.observations, dist}, rng), out);
    }
  }
  json config{{"design", a.kind},
              {"preset", a.preset},
              {"K", a.goods},
              {"T", a.observations},
              {"estimator", estimator_json(cfg)}};
  if (a.kind == "choi") {
    config["choi"] = {{"a", a.a}, {"b", a.b}, {"rule", a.choi_rule}};
  } else {
    config["smp_protocol"] = a.smp_protocol;
  }
  config["benchmark"] = a.benchmark;
  emit(table, g, "design", config, argv);
  return 0;
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::size_t observations = 2;
  std::string goods = "200";
  double a = 0.5;
  double b = 2.0;
  double epsilon = 0.0;
  double eta = 0.0;
  std::string prices_file;
};

int run_bounds(BoundsArgs a, const Globals& g, const std::vector<std::string>& argv) {
  json config;
  if (!a.prices_file.empty()) {
    const Dataset d = read_dataset(a.prices_file);
    const PriceRatioTensor rho = price_ratios(d);
    RngStream rng(g.seed, 0);
    const RatioBounds ab = certify_ratio_bounds(rho);
    const CycleCertificate eps = certify_cycle_max_margin_auto(rho, rng);
    const CycleCertificate eta = certify_cycle_sum_margin_auto(rho.carli(), rng);
    a.observations = d.observations();
    a.a = ab.a_hat;
    a.b = ab.b_hat;
    a.epsilon = eps.value;
    a.eta = eta.value;
    const auto mode = [](const CycleCertificate& c) {
      return c.mode == CertificateMode::kExhaustive ? "exhaustive" : "sampled";
    };
    config["certified_from"] = a.prices_file;
    config["epsilon_mode"] = mode(eps);
    config["eta_mode"] = mode(eta);
  }
  const auto cycles = enumerate_cycles(a.observations);
  Table table{{"K", "T", "graph_bound", "lp_bound", "C_T", "c1", "c2", "graph_bound_raw",
               "lp_bound_raw"},
              {}};
  for (std::size_t k : parse_grid(a.goods)) {
    const BoundParams p{k, a.observations, a.a, a.b, a.epsilon, a.eta};
    std::vector<std::string> row{std::to_string(k), std::to_string(a.observations)};
    std::string graph = "", lp = "", c1 = "", c2 = "", graph_raw = "", lp_raw = "";
    if (a.epsilon > 0.0) {
      const Bound b = graph_area_bound(p);
      graph = fmt::format("{:.6f}", b.value);
      graph_raw = fmt::format("{:.6g}", b.raw);
      c1 = fmt::format("{:.6g}", graph_bound_rate(p));
    }
    if (a.eta > 0.0) {
      const Bound b = lp_area_bound(p);
      lp = fmt::format("{:.6f}", b.value);
      lp_raw = fmt::format("{:.6g}", b.raw);
      c2 = fmt::format("{:.6g}", lp_bound_rate(p));
    }
    row.insert(row.end(), {graph, lp, cycles.str(), c1, c2, graph_raw, lp_raw});
    table.add(std::move(row));
  }
  config["T"] = a.observations;
  config["K"] = a.goods;
  config["a"] = a.a;
  config["b"] = a.b;
  config["epsilon"] = a.epsilon;
  config["eta"] = a.eta;
  emit(table, g, "bounds", config, argv);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Monte Carlo power of revealed-preference tests"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed");
  app.add_option("--threads", g.threads, "worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "directory for manifest.json and results");
  app.add_option("--format", g.format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--mu", g.mu, "log-price location");
  app.add_option("--sigma", g.sigma, "log-price dispersion");
  app.add_flag("--full", g.full, "presets at full draw counts");

  const auto add_estimation = [](CLI::App* cmd, Estimation& e) {
    cmd->add_option("--replications", e.replications);
    cmd->add_option("--draws", e.draws, "maximum share draws per replication");
    cmd->add_option("--target-halfwidth", e.target_halfwidth, "0 disables adaptive stopping");
    cmd->add_option("--ci-level", e.ci_level);
  };

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "GARP and Afriat LP verdict for a data file");
  check_cmd->add_option("file", check.file)->required();
  check_cmd->add_option("--method", check.method)->check(CLI::IsMember({"garp", "lp", "both"}));
  check_cmd->add_option("--tol-edge", check.tol_edge);
  check_cmd->add_option("--tol-lp", check.tol_lp);

  AreaArgs area;
  auto* area_cmd = app.add_subcommand("area", "Area at one (K, T)");
  area_cmd->add_option("--K,-K", area.goods);
  area_cmd->add_option("--T,-T", area.observations);
  area_cmd->add_option("--mode", area.mode)->check(CLI::IsMember({"garp", "lp"}));
  area_cmd->add_option("--prices", area.prices_file, "fix prices to those of a data file");
  add_estimation(area_cmd, area.est);

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "Area against the number of goods");
  curve_cmd->add_option("--preset", curve.preset)->check(CLI::IsMember({"fig3a", "fig3b"}));
  curve_cmd->add_option("--K,-K", curve.goods, "grid a:b[:step] or a,b,c");
  curve_cmd->add_option("--T,-T", curve.observations, "grid of T");
  curve_cmd->add_option("--sigmas", curve.sigmas, "comma list overriding --sigma");
  add_estimation(curve_cmd, curve.est);

  SeparabilityArgs sep;
  auto* sep_cmd = app.add_subcommand("separability", "Area under separability restrictions");
  sep_cmd->add_option("--preset", sep.preset)->check(CLI::IsMember({"fig4"}));
  sep_cmd->add_option("--K,-K", sep.goods);
  sep_cmd->add_option("--T,-T", sep.observations);
  sep_cmd->add_option("--G,-G", sep.group_sizes, "group sizes");
  sep_cmd->add_option("--partitions", sep.partitions, "random partitions per replication");
  sep_cmd->add_flag("--fixed-partition", sep.fixed_partition, "use contiguous groups");
  sep_cmd->add_option("--additive-form", sep.additive_form)
      ->check(CLI::IsMember({"normalised", "expenditure"}));
  add_estimation(sep_cmd, sep.est);

  DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Area of experimental budget designs");
  design_cmd->add_option("kind", design.kind)->check(CLI::IsMember({"choi", "smp"}));
  design_cmd->add_option("--preset", design.preset)->check(CLI::IsMember({"fig5a", "fig5b"}));
  design_cmd->add_option("--K,-K", design.goods);
  design_cmd->add_option("--T,-T", design.observations);
  design_cmd->add_option("--a", design.a, "lowest Choi intercept");
  design_cmd->add_option("--b", design.b, "highest Choi intercept");
  design_cmd->add_option("--choi-rule", design.choi_rule)->check(CLI::IsMember({"all", "any"}));
  design_cmd->add_option("--smp-protocol", design.smp_protocol)
      ->check(CLI::IsMember({"budgets", "chained"}));
  design_cmd->add_flag("--benchmark", design.benchmark, "add log-normal benchmark rows");
  design_cmd->add_option("--emit-dataset", design.emit_dataset, "write one generated design");
  add_estimation(design_cmd, design.est);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form lower bounds on the Area");
  bounds_cmd->add_option("--T,-T", bounds.observations);
  bounds_cmd->add_option("--K,-K", bounds.goods, "grid of K");
  bounds_cmd->add_option("--a", bounds.a);
  bounds_cmd->add_option("--b", bounds.b);
  bounds_cmd->add_option("--eps", bounds.epsilon, "cycle-max Carli margin");
  bounds_cmd->add_option("--eta", bounds.eta, "cycle-sum Carli margin");
  bounds_cmd->add_option("--prices", bounds.prices_file, "certify a, b, eps, eta from a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  const std::vector<std::string> args(argv, argv + argc);
  const auto count = [](CLI::App* cmd, const char* name) { return cmd->count(name) > 0; };
  try {
    if (*check_cmd) return run_check(check);
    if (*area_cmd) return run_area(area, g, args);
    if (*curve_cmd) {
      return run_curve(curve, g, args, count(curve_cmd, "--draws"),
                       count(curve_cmd, "--replications"));
    }
    if (*sep_cmd) {
      return run_separability(sep, g, args, count(sep_cmd, "--draws"),
                              count(sep_cmd, "--replications"), count(sep_cmd, "--partitions"));
    }
    if (*design_cmd) return run_design(design, g, args, count(design_cmd, "--draws"));
    if (*bounds_cmd) return run_bounds(bounds, g, args);
  } catch (const InputError& e) {
    if (e.line() > 0 && std::string(e.what()).rfind("line ", 0) != 0) {
      std::cerr << "input error: line " << e.line() << ": " << e.what() << '\n';
    } else {
      std::cerr << "input error: " << e.what() << '\n';
    }
    return kExitInputError;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  }
  return kExitInputError;
}

}  // namespace
}  // namespace rparea::cli

int main(int argc, char** argv) { return rparea::cli::run(argc, argv); }
