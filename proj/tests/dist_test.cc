//
// Copyright 2026 The ldpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "ldpkit/dist.h"

#include <cmath>
#include <limits>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ldpkit {
namespace {

using ::ldpkit::testing::RandomDistribution;
using ::ldpkit::testing::RandomSize;
using ::ldpkit::testing::RandomUniform;
using ::testing::HasSubstr;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(DistributionTest, RejectsInvalidVectors) {
  EXPECT_THROW(Distribution(Vector<double>(0)), DomainError);
  Vector<double> negative(2);
  negative << 1.5, -0.5;
  EXPECT_THROW(Distribution{negative}, DomainError);
  Vector<double> short_sum(2);
  short_sum << 0.5, 0.4;
  try {
    Distribution{short_sum};
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_THAT(e.what(), HasSubstr("sum"));
  }
}

TEST(DistributionTest, RenormalizesSmallDrift) {
  Vector<double> drift(2);
  drift << 0.5, 0.5 + 5e-10;
  const Distribution p(drift);
  EXPECT_NEAR(p.probs().sum(), 1.0, 1e-15);
  Vector<double> too_far(2);
  too_far << 0.5, 0.5 + 5e-9;
  EXPECT_THROW(Distribution{too_far}, DomainError);
}

TEST(TotalVariationTest, Examples) {
  const Distribution p = Distribution::Bernoulli(0.3);
  EXPECT_EQ(TotalVariation(p, p), 0.0);
  EXPECT_EQ(TotalVariation(Distribution::PointMass(2, 0), Distribution::PointMass(2, 1)), 1.0);
  EXPECT_DOUBLE_EQ(TotalVariation(Distribution::Bernoulli(0.5), Distribution::Bernoulli(0.25)),
                   0.25);
}

TEST(TotalVariationTest, DimensionMismatch) {
  EXPECT_THROW(TotalVariation(Distribution::Uniform(2), Distribution::Uniform(3)),
               DimensionError);
  EXPECT_THROW(Egamma(Distribution::Uniform(2), Distribution::Uniform(3), 2.0), DimensionError);
  EXPECT_THROW(HellingerSquared(Distribution::Uniform(2), Distribution::Uniform(3)),
               DimensionError);
}

TEST(EgammaTest, Examples) {
  const Distribution p = Distribution::Bernoulli(0.3);
  const Distribution q = Distribution::Bernoulli(0.8);
  for (double gamma : {1.0, 1.5, 3.0}) EXPECT_EQ(Egamma(p, p, gamma), 0.0);
  EXPECT_DOUBLE_EQ(Egamma(p, q, 1.0), TotalVariation(p, q));
  // Below gamma = 1 the (1 - gamma)_+ correction leaves gamma itself.
  for (double gamma : {0.0, 0.3, 1.0, 2.0, 100.0}) {
    EXPECT_DOUBLE_EQ(
        Egamma(Distribution::PointMass(2, 0), Distribution::PointMass(2, 1), gamma),
        std::min(gamma, 1.0));
  }
}

TEST(EgammaTest, InfiniteGammaKeepsMassOffSupport) {
  Vector<double> a(3), b(3);
  a << 0.2, 0.3, 0.5;
  b << 0.0, 0.5, 0.5;
  EXPECT_DOUBLE_EQ(Egamma(a, b, kInf), 0.2);
}

TEST(EgammaTest, NegativeGammaIsDomainError) {
  const Distribution p = Distribution::Uniform(2);
  EXPECT_THROW(Egamma(p, p, -0.1), DomainError);
  EXPECT_THROW(FGenerator::Egamma(-1.0), DomainError);
}

TEST(FDivergenceTest, Examples) {
  const Distribution half = Distribution::Bernoulli(0.5);
  const Distribution quarter = Distribution::Bernoulli(0.25);
  for (const FGenerator& f :
       {FGenerator::TotalVariation(), FGenerator::KL(), FGenerator::ChiSquared(),
        FGenerator::HellingerSquared(), FGenerator::Egamma(2.0)}) {
    EXPECT_EQ(FDivergence(half, half, f), 0.0) << f.name();
  }
  // 0.5 ln 2 + 0.5 ln(2/3).
  EXPECT_NEAR(FDivergence(half, quarter, FGenerator::KL()), 0.14384103622589042, 1e-15);
  EXPECT_NEAR(FDivergence(half, quarter, FGenerator::ChiSquared()),
              0.25 * 0.25 / 0.75 + 0.25 * 0.25 / 0.25, 1e-15);
}

TEST(FDivergenceTest, SupportViolationsFollowTheLimitConvention) {
  const Distribution p = Distribution::Bernoulli(0.5);
  const Distribution q = Distribution::PointMass(2, 0);
  EXPECT_EQ(FDivergence(p, q, FGenerator::KL()), kInf);
  EXPECT_EQ(FDivergence(p, q, FGenerator::ChiSquared()), kInf);
  EXPECT_DOUBLE_EQ(FDivergence(p, q, FGenerator::TotalVariation()), 0.5);
  EXPECT_DOUBLE_EQ(FDivergence(p, q, FGenerator::HellingerSquared()),
                   0.5857864376269049);
  // Zero mass where q vanishes is harmless.
  EXPECT_NEAR(FDivergence(q, p, FGenerator::KL()), std::log(2.0), 1e-15);
}

TEST(FDivergenceTest, GeneratorsVanishAtOne) {
  for (const FGenerator& f :
       {FGenerator::TotalVariation(), FGenerator::KL(), FGenerator::ChiSquared(),
        FGenerator::HellingerSquared(), FGenerator::Egamma(0.5), FGenerator::Egamma(3.0)}) {
    EXPECT_EQ(f(1.0), 0.0) << f.name();
  }
}

TEST(HellingerTest, Examples) {
  const Distribution p = Distribution::Bernoulli(0.4);
  EXPECT_EQ(HellingerSquared(p, p), 0.0);
  EXPECT_DOUBLE_EQ(
      HellingerSquared(Distribution::PointMass(2, 0), Distribution::PointMass(2, 1)), 2.0);
  EXPECT_NEAR(HellingerSquared(Distribution::Bernoulli(0.5), Distribution::Bernoulli(0.0)),
              0.585786437626905, 1e-15);
}

// Generic f-divergence sum_i q_i f(p_i / q_i) on full-support pairs, written
// straight from the definition as an independent route.
double DefinitionalFDivergence(const Distribution& p, const Distribution& q,
                               const FGenerator& f) {
  double sum = 0.0;
  for (Index i = 0; i < p.size(); ++i) sum += q[i] * f(p[i] / q[i]);
  return sum;
}

TEST(DivergencePropertyTest, MatchesDefinitionOnFullSupport) {
  std::mt19937_64 engine(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index size = RandomSize(engine, 1, 6);
    const Distribution p = RandomDistribution(size, engine);
    const Distribution q = RandomDistribution(size, engine);
    const double gamma = RandomUniform(engine, 0.0, 5.0);
    for (const FGenerator& f :
         {FGenerator::TotalVariation(), FGenerator::KL(), FGenerator::ChiSquared(),
          FGenerator::HellingerSquared(), FGenerator::Egamma(gamma)}) {
      const double direct = FDivergence(p, q, f);
      const double definitional = DefinitionalFDivergence(p, q, f);
      EXPECT_NEAR(direct, definitional, 1e-10 * (1.0 + std::abs(definitional))) << f.name();
    }
  }
}

TEST(DivergencePropertyTest, ThreeEgammaFormsAgree) {
  std::mt19937_64 engine(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index size = RandomSize(engine, 1, 6);
    const Distribution p = RandomDistribution(size, engine, 0.3);
    const Distribution q = RandomDistribution(size, engine, 0.3);
    const double gamma = RandomUniform(engine, 0.0, 5.0);
    const double sup_form = Egamma(p, q, gamma);
    EXPECT_NEAR(sup_form, EgammaIntegralForm(p.probs(), q.probs(), gamma), 1e-12);
    EXPECT_NEAR(sup_form, EgammaThresholdForm(p.probs(), q.probs(), gamma), 1e-12);
    EXPECT_EQ(sup_form, FDivergence(p, q, FGenerator::Egamma(gamma)));
  }
}

TEST(DivergencePropertyTest, EgammaShapeAndSandwich) {
  std::mt19937_64 engine(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index size = RandomSize(engine, 2, 6);
    const Distribution p = RandomDistribution(size, engine, 0.2);
    const Distribution q = RandomDistribution(size, engine, 0.2);
    const double tv = TotalVariation(p, q);
    EXPECT_NEAR(Egamma(p, q, 0.0), 0.0, 1e-15);
    // Rises to TV on [0, 1], then falls.
    double previous = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double gamma = 0.05 * i;
      const double value = Egamma(p, q, gamma);
      if (gamma <= 1.0) {
        EXPECT_GE(value, previous - 1e-15);
      } else {
        EXPECT_LE(value, previous + 1e-15);
      }
      previous = value;
      if (gamma >= 1.0) {
        EXPECT_LE(value, tv + 1e-10);
        EXPECT_GE(value, 1.0 - gamma * (1.0 - tv) - 1e-10);
      }
    }
  }
}

TEST(DivergencePropertyTest, OrderingAndPinsker) {
  std::mt19937_64 engine(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index size = RandomSize(engine, 2, 6);
    const Distribution p = RandomDistribution(size, engine, 0.2);
    const Distribution q = RandomDistribution(size, engine, 0.2);
    const double tv = TotalVariation(p, q);
    const double h2 = HellingerSquared(p, q);
    EXPECT_GE(tv, 0.0);
    EXPECT_LE(tv, std::sqrt(h2) + 1e-10);
    EXPECT_LE(h2, 2.0 + 1e-12);
    EXPECT_LE(tv * tv, 0.5 * KLDivergence(p, q) + 1e-10);
  }
}

TEST(DistributionTest, WorksWithLongDouble) {
  using LongDist = BasicDistribution<long double>;
  const LongDist p = LongDist::Bernoulli(0.5L);
  const LongDist q = LongDist::Bernoulli(0.25L);
  EXPECT_NEAR(static_cast<double>(TotalVariation(p, q)), 0.25, 1e-18);
  EXPECT_NEAR(static_cast<double>(Egamma(p, q, 1.0L)), 0.25, 1e-18);
}

}  // namespace
}  // namespace ldpkit
