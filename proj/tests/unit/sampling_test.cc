#include "rparea/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "rparea/errors.h"
#include "rparea/partition.h"

namespace rparea {
namespace {

TEST(RngStream, ReproducibleAndDistinct) {
  RngStream a(1, 5), b(1, 5), c(1, 6), d(2, 5);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
  }
}

TEST(RngStream, UniformIsOpenInterval) {
  RngStream rng(3, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngStream, JumpChangesState) {
  RngStream a(4, 4), b(4, 4);
  b.jump();
  EXPECT_NE(a(), b());
}

TEST(DeriveStreamId, SeparatesReplicationsAndPoints) {
  EXPECT_NE(derive_stream_id(0, 1), derive_stream_id(1, 0));
  EXPECT_NE(derive_stream_id(0, 0), derive_stream_id(0, 1));
  EXPECT_EQ(derive_stream_id(3, 9), derive_stream_id(3, 9));
}

TEST(SampleSimplex, SumsToOne) {
  RngStream rng(5, 0);
  for (std::size_t k = 2; k < 50; ++k) {
    const auto w = sample_simplex(k, rng);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    for (double v : w) EXPECT_GE(v, 0.0);
  }
  EXPECT_THROW(sample_simplex(1, rng), DomainError);
}

TEST(SampleSimplex, Moments) {
  RngStream rng(6, 0);
  const int n = 1000000;
  double mean2 = 0.0, sum5 = 0.0, sq5 = 0.0;
  std::vector<double> w2(2), w5(5);
  for (int i = 0; i < n; ++i) {
    sample_simplex(w2, rng);
    mean2 += w2[0];
    sample_simplex(w5, rng);
    sum5 += w5[0];
    sq5 += w5[0] * w5[0];
  }
  EXPECT_NEAR(mean2 / n, 0.5, 0.002);
  const double m5 = sum5 / n;
  const double var5 = sq5 / n - m5 * m5;
  EXPECT_NEAR(var5, 4.0 / 150.0, 0.05 * 4.0 / 150.0);
}

TEST(SampleSimplex, OrderingRegionsAreUniform) {
  RngStream rng(7, 0);
  const int n = 1000000;
  std::array<int, 6> counts{};
  std::vector<double> w(3);
  for (int i = 0; i < n; ++i) {
    sample_simplex(w, rng);
    const int region = (w[0] < w[1]) * 1 + (w[1] < w[2]) * 2 + (w[0] < w[2]) * 4;
    // Codes 3 and 4 are impossible orderings; map the six valid codes.
    static constexpr int kSlot[8] = {0, 1, 2, -1, -1, 3, 4, 5};
    ASSERT_GE(kSlot[region], 0);
    ++counts[kSlot[region]];
  }
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / n, 1.0 / 6.0, 0.002);
}

TEST(SamplePrices, DegenerateDispersion) {
  RngStream rng(8, 0);
  const auto r = sample_prices(10, PriceDistribution{0.0, 1e-9}, rng);
  for (double v : r) EXPECT_NEAR(v, 1.0, 1e-6);
}

TEST(SamplePrices, MedianAndLogMoments) {
  RngStream rng(9, 0);
  const std::size_t n = 1000000;
  auto r = sample_prices(n, PriceDistribution{}, rng);
  std::vector<double> inv(n);
  std::transform(r.begin(), r.end(), inv.begin(), [](double v) { return 1.0 / v; });
  std::nth_element(inv.begin(), inv.begin() + n / 2, inv.end());
  EXPECT_NEAR(inv[n / 2], 1.0, 0.01);

  const auto s = sample_prices(n, PriceDistribution{5.69, 1.19}, rng);
  double sum = 0.0, sq = 0.0;
  for (double v : s) {
    const double l = std::log(1.0 / v);
    sum += l;
    sq += l * l;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 5.69, 0.01);
  EXPECT_NEAR(std::sqrt(sq / n - mean * mean), 1.19, 0.01);
}

TEST(SamplePrices, TruncationBoundsRatios) {
  const PriceDistribution dist{0.0, 1.0, 1e-6};
  EXPECT_NEAR(dist.z_clip(), 4.753424, 1e-5);
  const auto [a, b] = dist.ratio_bounds();
  EXPECT_NEAR(a * b, 1.0, 1e-12);
  EXPECT_THROW((PriceDistribution{0.0, 0.0}.validate()), DomainError);
  EXPECT_THROW((PriceDistribution{0.0, 1.0, 0.7}.validate()), DomainError);
}

TEST(PartitionSpec, ValidatesGroups) {
  EXPECT_NO_THROW(PartitionSpec({{0, 2}, {1}}, 3));
  EXPECT_THROW(PartitionSpec({{0}, {0, 1}}, 2), DomainError);
  EXPECT_THROW(PartitionSpec({{0}}, 2), DomainError);
  EXPECT_THROW(PartitionSpec({{0, 1}, {}}, 2), DomainError);
  EXPECT_THROW(PartitionSpec::contiguous(6, 4), DomainError);
}

TEST(PartitionSpec, RandomEqualCoversEveryGood) {
  RngStream rng(10, 0);
  const PartitionSpec p = PartitionSpec::random_equal(24, 8, rng);
  ASSERT_EQ(p.group_count(), 3u);
  std::vector<int> seen(24, 0);
  for (const auto& g : p.groups()) {
    EXPECT_EQ(g.size(), 8u);
    for (std::size_t k : g) ++seen[k];
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}

}  // namespace
}  // namespace rparea
