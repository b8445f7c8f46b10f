#include "rparea/sampling.h"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "rparea/errors.h"

namespace rparea {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_id(std::uint64_t replication, std::uint64_t grid_point) {
  return mix64(mix64(grid_point) ^ (replication + 1));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::uint64_t s = mix64(seed) ^ mix64(stream_id ^ kGolden);
  for (auto& word : state_) {
    s += kGolden;
    word = mix64(s);
  }
}

RngStream::result_type RngStream::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

void RngStream::jump() {
  static constexpr std::array<std::uint64_t, 4> kJump = {
      0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
      0x39abdc4529b1661cULL};
  std::array<std::uint64_t, 4> acc{};
  for (std::uint64_t word : kJump) {
    for (int b = 0; b < 64; ++b) {
      if (word & (std::uint64_t{1} << b)) {
        for (std::size_t i = 0; i < 4; ++i) acc[i] ^= state_[i];
      }
      (*this)();
    }
  }
  state_ = acc;
}

double RngStream::uniform() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform()); }

double RngStream::normal() { return normal_(*this); }

void PriceDistribution::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("price dispersion sigma must be positive");
  }
  if (!std::isfinite(mu)) throw DomainError("price location mu must be finite");
  if (!(truncation_q > 0.0 && truncation_q < 0.5)) {
    throw DomainError("truncation quantile must lie in (0, 0.5)");
  }
}

double PriceDistribution::z_clip() const {
  return boost::math::quantile(boost::math::normal_distribution<double>(),
                               1.0 - truncation_q);
}

std::pair<double, double> PriceDistribution::ratio_bounds() const {
  const double spread = 2.0 * sigma * z_clip();
  return {std::exp(-spread), std::exp(spread)};
}

void sample_simplex(std::span<double> out, RngStream& rng) {
  double sum = 0.0;
  for (double& y : out) {
    y = rng.exponential();
    sum += y;
  }
  for (double& y : out) y /= sum;
}

std::vector<double> sample_simplex(std::size_t k, RngStream& rng) {
  if (k < 2) throw DomainError("simplex sampling needs K >= 2");
  std::vector<double> w(k);
  sample_simplex(w, rng);
  return w;
}

void sample_prices(std::span<double> out, const PriceDistribution& dist, RngStream& rng) {
  const double clip = dist.z_clip();
  for (double& r : out) {
    const double z = std::clamp(rng.normal(), -clip, clip);
    r = std::exp(-(dist.mu + dist.sigma * z));
  }
}

std::vector<double> sample_prices(std::size_t k, const PriceDistribution& dist,
                                  RngStream& rng) {
  dist.validate();
  std::vector<double> r(k);
  sample_prices(r, dist, rng);
  return r;
}

Matrix sample_price_matrix(std::size_t t, std::size_t k, const PriceDistribution& dist,
                           RngStream& rng) {
  dist.validate();
  Matrix r(t, k);
  for (std::size_t i = 0; i < t; ++i) sample_prices(r.row(i), dist, rng);
  return r;
}

}  // namespace rparea
