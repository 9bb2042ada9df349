#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "elections/generator.hpp"
#include "oracles.hpp"

using namespace elections;

namespace {

const PcaModel& bundled_model() {
  static const PcaModel m = fit_pca(oracle::bundled());
  return m;
}

PcaModel toy_model() {
  PcaModel m;
  m.mean = {0.5, 0.7};
  m.eigenvalues = {0.04};
  m.eigenvectors = {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}};
  m.n = 2;
  return m;
}

}  // namespace

TEST(DrawNoise, DeterministicPerSeedAndTrial) {
  const auto a = draw_noise(42, 0);
  const auto b = draw_noise(42, 0);
  ASSERT_EQ(a.z.size(), 11u);
  EXPECT_EQ(a.z, b.z);
  EXPECT_NE(a.z, draw_noise(42, 1).z);
  EXPECT_NE(a.z, draw_noise(43, 0).z);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_EQ(a.trial_index, 0u);
}

TEST(DrawNoise, PooledMomentsAreStandardNormal) {
  // 10,000 trials × 10 draws = 100,000 variates.
  double sum = 0.0, sum2 = 0.0;
  const int trials = 10000, per = 10;
  for (int t = 0; t < trials; ++t) {
    for (double z : draw_noise(7, t, per).z) {
      sum += z;
      sum2 += z * z;
    }
  }
  const double n = trials * per;
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(var, 1.0, 0.02);
}

TEST(DrawNoise, ComponentsAreUncorrelated) {
  const int trials = 20000;
  std::vector<std::vector<double>> z(trials);
  for (int t = 0; t < trials; ++t) z[t] = draw_noise(3, t).z;
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = i + 1; j < 11; ++j) {
      double c = 0.0;
      for (const auto& v : z) c += v[i] * v[j];
      // sd of the estimate is 1/√20000 ≈ 0.007
      EXPECT_NEAR(c / trials, 0.0, 0.04) << i << "," << j;
    }
  }
}

TEST(DrawNoise, AdjacentSeedsGiveUncorrelatedStreams) {
  double c = 0.0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) c += draw_noise(100, t).z[0] * draw_noise(101, t).z[0];
  EXPECT_NEAR(c / trials, 0.0, 0.04);
}

TEST(GenerateShares, ZeroNoiseGivesMean) {
  const auto& m = bundled_model();
  const auto s = generate_shares(m, std::vector<double>(11, 0.0));
  EXPECT_EQ(s.raw, m.mean);
  EXPECT_EQ(s.clamped, m.mean);
}

TEST(GenerateShares, ToyModel) {
  const auto s = generate_shares(toy_model(), std::vector<double>{1.0});
  // z·√λ·E = 1 · 0.2 · (1/√2, 1/√2)
  EXPECT_NEAR(s.raw[0], 0.5 + 0.2 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.raw[1], 0.7 + 0.2 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.raw[0], 0.6414, 1e-4);
  EXPECT_NEAR(s.raw[1], 0.8414, 1e-4);
}

TEST(GenerateShares, ClampsOnlyOutOfRangeEntries) {
  const auto s = generate_shares(toy_model(), std::vector<double>{30.0});  // offset 30·0.2/√2 ≈ 4.24
  EXPECT_GT(s.raw[0], 1.0);
  EXPECT_EQ(s.clamped[0], 1.0);
  const auto low = generate_shares(toy_model(), std::vector<double>{-30.0});
  EXPECT_LT(low.raw[1], 0.0);
  EXPECT_EQ(low.clamped[1], 0.0);

  for (int t = 0; t < 2000; ++t) {
    const auto x = generate_shares(bundled_model(), draw_noise(9, t));
    for (std::size_t s = 0; s < x.raw.size(); ++s) {
      EXPECT_GE(x.clamped[s], 0.0);
      EXPECT_LE(x.clamped[s], 1.0);
      if (x.raw[s] >= 0.0 && x.raw[s] <= 1.0) {
        EXPECT_EQ(x.clamped[s], x.raw[s]);
      }
    }
  }
}

TEST(GenerateShares, DimensionMismatch) {
  try {
    generate_shares(bundled_model(), std::vector<double>(10, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  EXPECT_THROW(generate_shares(PcaModel{}, std::vector<double>{}), Error);
}

TEST(GenerateShares, LinearInNoise) {
  const auto& m = bundled_model();
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> a(11), b(11), ab(11);
    for (std::size_t j = 0; j < 11; ++j) {
      a[j] = normal(rng);
      b[j] = normal(rng);
      ab[j] = a[j] + b[j];
    }
    const auto sa = generate_shares(m, a), sb = generate_shares(m, b), sab = generate_shares(m, ab);
    for (std::size_t s = 0; s < 51; ++s) {
      EXPECT_NEAR(sab.raw[s] - m.mean[s], (sa.raw[s] - m.mean[s]) + (sb.raw[s] - m.mean[s]), 1e-13);
    }
  }
}

TEST(GenerateShares, MomentsMatchModelAt50000Draws) {
  const auto& m = bundled_model();
  const int n = 50000;
  std::vector<double> mean(51, 0.0);
  Matrix second(51, 51);
  std::vector<double> proj_var(m.components(), 0.0);
  for (int t = 0; t < n; ++t) {
    const auto raw = generate_shares(m, draw_noise(2024, t)).raw;
    for (std::size_t a = 0; a < 51; ++a) {
      const double da = raw[a] - m.mean[a];
      mean[a] += raw[a];
      for (std::size_t b = 0; b < 51; ++b) second(a, b) += da * (raw[b] - m.mean[b]);
    }
    for (std::size_t j = 0; j < m.components(); ++j) {
      double p = 0.0;
      for (std::size_t s = 0; s < 51; ++s) p += (raw[s] - m.mean[s]) * m.eigenvectors[j][s];
      proj_var[j] += p * p;
    }
  }
  const Matrix target = reconstruct_covariance(m);
  double worst_mean = 0.0, worst_cov = 0.0;
  for (std::size_t a = 0; a < 51; ++a) {
    worst_mean = std::max(worst_mean, std::abs(mean[a] / n - m.mean[a]));
    for (std::size_t b = 0; b < 51; ++b) worst_cov = std::max(worst_cov, std::abs(second(a, b) / n - target(a, b)));
  }
  EXPECT_LE(worst_mean, 0.01);
  EXPECT_LE(worst_cov, 0.01);
  // Standard deviation along Eⱼ is √λⱼ; relative sd of the variance estimate is √(2/n) ≈ 0.6%.
  for (std::size_t j = 0; j < m.components(); ++j) {
    EXPECT_NEAR(proj_var[j] / n / m.eigenvalues[j], 1.0, 0.04) << "component " << j + 1;
  }
}
