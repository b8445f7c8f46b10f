#ifndef RPAREA_SAMPLING_H_
#define RPAREA_SAMPLING_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "rparea/matrix.h"

namespace rparea {

// xoshiro256** seeded through SplitMix64 from (seed, stream_id). Period
// 2^256 - 1; jump() advances by 2^128 draws. Satisfies
// UniformRandomBitGenerator, so it plugs into <random> distributions.
//
// Identical (seed, stream_id) pairs reproduce identical draw sequences.
// Streams are plain values and may be moved between threads, but a single
// stream must not be used concurrently.
class RngStream {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kAlgorithm = "xoshiro256**/splitmix64";

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  // Uniform on the open interval (0, 1).
  double uniform();
  double exponential();
  double normal();

  void jump();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_{};
  std::normal_distribution<double> normal_;
};

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

// stream_id = mix64(mix64(grid_point) ^ (replication + 1)). Every work unit
// in an estimator run owns the stream (seed, derive_stream_id(rep, point)),
// which makes results independent of thread count.
std::uint64_t derive_stream_id(std::uint64_t replication, std::uint64_t grid_point);

// Inverse normalised prices are log-normal: 1 / r = exp(mu + sigma z).
// z is clipped to the [q, 1 - q] quantile range of the standard normal so
// that price ratios are bounded.
struct PriceDistribution {
  double mu = 0.0;
  double sigma = 1.0;
  double truncation_q = 1e-6;

  void validate() const;
  // Standard-normal clip point, Phi^{-1}(1 - q).
  double z_clip() const;
  // Bounds [a, b] on any price ratio r_i^k / r_j^k implied by the clipping.
  std::pair<double, double> ratio_bounds() const;
};

// Uniform point on the (K-1)-simplex: normalised unit exponentials.
void sample_simplex(std::span<double> out, RngStream& rng);
std::vector<double> sample_simplex(std::size_t k, RngStream& rng);

void sample_prices(std::span<double> out, const PriceDistribution& dist, RngStream& rng);
std::vector<double> sample_prices(std::size_t k, const PriceDistribution& dist,
                                  RngStream& rng);
// T x K matrix of independent price vectors.
Matrix sample_price_matrix(std::size_t t, std::size_t k, const PriceDistribution& dist,
                           RngStream& rng);

}  // namespace rparea

#endif  // RPAREA_SAMPLING_H_
