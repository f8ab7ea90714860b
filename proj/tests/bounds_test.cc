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

#include "ldpkit/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "ldpkit/info.h"
#include "ldpkit/kernel.h"

namespace ldpkit {
namespace {

constexpr double kLn2 = std::numbers::ln2;

BayesConfig ConfigFor(double info, int n, double eps, double delta) {
  BayesConfig cfg;
  cfg.info_value = info;
  cfg.n = n;
  cfg.params = PrivacyParams(eps, delta);
  return cfg;
}

bool OnGrid(const Grid& grid, double value) {
  const std::vector<double> points = grid.Points();
  return std::find(points.begin(), points.end(), value) != points.end();
}

TEST(LeCamTest, Examples) {
  LeCamConfig cfg{1.0, 0.4, 3, PrivacyParams(0.0, 0.0)};
  EXPECT_DOUBLE_EQ(LeCamPrivate(cfg).value, 0.5);
  cfg.params = PrivacyParams(0.7, 1.0);
  EXPECT_DOUBLE_EQ(LeCamPrivate(cfg).value, LeCamNonPrivate(1.0, 0.4, 3));
  EXPECT_NEAR(LeCamNonPrivate(1.0, 0.4, 3), 0.5 * (1.0 - std::sqrt(0.6)), 1e-15);
  const PrivacyParams params(0.5, 0.2);
  const double phi = Phi(params);
  cfg = LeCamConfig{1.0, 1.0 / (2.0 * 4 * phi), 4, params};
  EXPECT_NEAR(LeCamPrivate(cfg).value, 0.25, 1e-15);
  cfg = LeCamConfig{2.0, 0.3, 5, PrivacyParams(0.5, 0.01)};
  EXPECT_NEAR(LeCamPrivate(cfg).value, 0.4525961407120245, 1e-14);
}

TEST(LeCamTest, VacuousClampsAndValidation) {
  const BoundReport r = LeCamPrivate(LeCamConfig{1.0, 100.0, 10, PrivacyParams(1.0, 0.5)});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.HasFlag(kFlagVacuous));
  EXPECT_THROW(LeCamPrivate(LeCamConfig{0.0, 1.0, 1, PrivacyParams(1.0, 0.0)}), DomainError);
  EXPECT_THROW(LeCamPrivate(LeCamConfig{1.0, 1.0, 0, PrivacyParams(1.0, 0.0)}), DomainError);
  // An infinite divergence silenced by perfect privacy.
  EXPECT_DOUBLE_EQ(
      LeCamPrivate(LeCamConfig{1.0, INFINITY, 1, PrivacyParams(0.0, 0.0)}).value, 0.5);
}

TEST(MomentEstimationTest, Examples) {
  const BoundReport r = MomentEstimationLb(2.0, 1, PrivacyParams(0.0, 1.0));
  EXPECT_NEAR(r.witness.at("omega"), 0.125, 1e-15);
  EXPECT_NEAR(r.value, 0.0625, 1e-15);
  EXPECT_TRUE(r.HasFlag(kFlagExplicitConstant));
  const BoundReport trivial = MomentEstimationLb(3.0, 10, PrivacyParams(0.0, 0.0));
  EXPECT_TRUE(trivial.HasFlag(kFlagTrivial));
  EXPECT_EQ(trivial.value, 1.0);
  EXPECT_THROW(MomentEstimationLb(1.0, 1, PrivacyParams(1.0, 0.0)), DomainError);
}

TEST(MomentEstimationTest, LargeMomentOrderApproachesOmegaSquared) {
  const PrivacyParams params(0.0, 1.0);
  const BoundReport r = MomentEstimationLb(1e9, 1, params);
  EXPECT_NEAR(r.value, 0.125 * 0.125 * 0.5, 1e-9);
}

TEST(MomentEstimationTest, ExplicitChoiceGoesVacuousForLargeN) {
  // With omega phi = 1 - (7/8)^{1/sqrt n}, the bracket
  // 1 - sqrt2 sqrt(1 - (7/8)^{sqrt n}) turns negative once sqrt n > 5.19.
  EXPECT_GT(MomentEstimationLb(2.0, 26, PrivacyParams(1.0, 0.0)).value, 0.0);
  const BoundReport r = MomentEstimationLb(2.0, 27, PrivacyParams(1.0, 0.0));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.HasFlag(kFlagVacuous));
}

TEST(FanoTest, MiUpperExamples) {
  FanoConfig cfg;
  cfg.v_count = 4;
  cfg.avg_pairwise_kl = 0.3;
  cfg.n = 5;
  cfg.params = PrivacyParams(0.0, 0.0);
  EXPECT_EQ(FanoMiUpper(cfg), 0.0);
  cfg.params = PrivacyParams(0.2, 1.0);
  EXPECT_NEAR(FanoMiUpper(cfg), 1.5, 1e-15);
  cfg.mi_xv = 0.8;
  cfg.params = PrivacyParams(std::log(2.0), 0.0);
  EXPECT_NEAR(FanoMiUpper(cfg), 0.8 * (1.0 - std::pow(0.5, 5)), 1e-15);
}

TEST(FanoTest, LbExamples) {
  FanoConfig cfg;
  cfg.tau = 1.5;
  cfg.params = PrivacyParams(0.0, 0.0);
  cfg.avg_pairwise_kl = 1.0;
  cfg.v_count = 2;
  EXPECT_EQ(FanoLb(cfg).value, 0.0);
  cfg.v_count = 8;
  EXPECT_NEAR(FanoLb(cfg).value, 1.0, 1e-15);
  cfg.v_count = 1 << 30;
  cfg.params = PrivacyParams(1.0, 0.0);
  EXPECT_NEAR(FanoLb(cfg).value, 1.5 * (1.0 - (Phi(cfg.params) + kLn2) / (30 * kLn2)), 1e-14);
  cfg.v_count = 1;
  EXPECT_THROW(FanoLb(cfg), DomainError);
  EXPECT_THROW(FanoNonPrivate(1.0, 0.0, 1), DomainError);
}

TEST(FanoTest, PhiNVersusDuchiCoefficient) {
  // At eps = 0.4, n = 1: 1 - e^{-0.4} against 2(e^{0.4} - 1).
  EXPECT_NEAR(PhiN(PrivacyParams(0.4, 0.0), 1), 0.32967995396436067, 1e-15);
  EXPECT_NEAR(DuchiMiCoefficient(0.4), 0.9836493952825408, 1e-15);
  // phi_n < 1 <= 2(e^eps - 1) once eps >= ln 1.5, for every n.
  for (double eps = std::log(1.5); eps < 5.0; eps += 0.05) {
    for (int n = 1; n <= 200; ++n) {
      EXPECT_LE(PhiN(PrivacyParams(eps, 0.0), n), DuchiMiCoefficient(eps));
    }
  }
  // Just below ln 1.5 the Duchi coefficient is under 1 and phi_n overtakes it.
  EXPECT_GT(PhiN(PrivacyParams(0.4, 0.0), 11), DuchiMiCoefficient(0.4));
  EXPECT_LT(PhiN(PrivacyParams(0.4, 0.0), 10), DuchiMiCoefficient(0.4));
}

TEST(HighDimMeanTest, Examples) {
  const BoundReport r = HighDimMeanLb(64, 1.0, 256, PrivacyParams(0.0, 1.0));
  EXPECT_EQ(r.witness.at("k"), 64.0);
  EXPECT_NEAR(r.witness.at("omega"), 0.005, 1e-17);
  // (0.005^2 / 64) (1 - 16 * 2.28 * ln2 / 64).
  EXPECT_NEAR(r.value, 2.3629144807844967e-07, 1e-20);
  const BoundReport doubled = HighDimMeanLb(64, 2.0, 256, PrivacyParams(0.0, 1.0));
  EXPECT_NEAR(doubled.value, 4.0 * r.value, 1e-20);
  const BoundReport trivial = HighDimMeanLb(64, 1.0, 256, PrivacyParams(0.0, 0.0));
  EXPECT_TRUE(trivial.HasFlag(kFlagTrivial));
  EXPECT_THROW(HighDimMeanLb(0, 1.0, 1, PrivacyParams(0.0, 1.0)), DomainError);
  EXPECT_THROW(HighDimMeanLb(4, -1.0, 1, PrivacyParams(0.0, 1.0)), DomainError);
}

TEST(HighDimMeanTest, SmallEffectiveSampleUsesSixteen) {
  const BoundReport r = HighDimMeanLb(1000, 1.0, 10, PrivacyParams(0.001, 0.0));
  EXPECT_EQ(r.witness.at("k"), 16.0);
  EXPECT_EQ(r.witness.at("omega"), 1.0);
}

TEST(BayesXuRaginskyTest, MatchesContinuousOptimum) {
  // Continuous maxima of zeta (1 - c / ln(1/(2 zeta))), c = ln 2 and
  // c = ln 2 + ln 2 - 1/2, found with a bounded scalar optimizer.
  const BoundReport zero = BayesXuRaginsky(UniformAbsoluteLossSmallBall, 0.0, DefaultZetaGrid());
  EXPECT_NEAR(zero.value, 0.06381661814607256, 1e-5);
  EXPECT_NEAR(zero.witness.at("zeta"), 0.14348420927600897, 2e-3);
  const BoundReport mi =
      BayesXuRaginsky(UniformAbsoluteLossSmallBall, kLn2 - 0.5, DefaultZetaGrid());
  EXPECT_NEAR(mi.value, 0.045659431843318214, 1e-5);
  EXPECT_TRUE(OnGrid(DefaultZetaGrid(), mi.witness.at("zeta")));
}

TEST(BayesXuRaginskyTest, PrivateReducesToNonPrivateAtDeltaOne) {
  for (int n : {1, 5}) {
    const BoundReport priv = BayesXuRaginskyPrivate(ConfigFor(0.3, n, 0.8, 1.0));
    const BoundReport plain =
        BayesXuRaginsky(UniformAbsoluteLossSmallBall, 0.3, DefaultZetaGrid());
    EXPECT_EQ(priv.value, plain.value);
  }
}

TEST(BayesXuRaginskyTest, NoConcentrationMeansEmptyGrid) {
  BayesConfig cfg = ConfigFor(0.3, 1, 1.0, 0.0);
  cfg.small_ball = [](double) { return 1.0; };
  const BoundReport r = BayesXuRaginskyPrivate(cfg);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.HasFlag(kFlagEmptyFeasibleGrid));
}

TEST(BayesEgammaTest, Examples) {
  // delta = 0, n = 1: sup zeta (1 - 2 e^eps zeta) = 1 / (8 e^eps).
  for (double eps : {0.5, 1.0}) {
    const BoundReport r = BayesEgammaLb(ConfigFor(0.7, 1, eps, 0.0));
    EXPECT_NEAR(r.value, 1.0 / (8.0 * std::exp(eps)), 1e-6);
    EXPECT_EQ(r.inputs.at("coefficient"), 0.0);
  }
  BayesConfig flat = ConfigFor(0.1, 3, 0.5, 0.1);
  flat.small_ball = [](double) { return 1.0; };
  EXPECT_EQ(BayesEgammaLb(flat).value, 0.0);
  const BoundReport n3 = BayesEgammaLb(ConfigFor(0.1, 3, 0.5, 0.1));
  EXPECT_DOUBLE_EQ(n3.inputs.at("coefficient"), PhiN(PrivacyParams(0.5, 0.1), 3));
}

TEST(BayesGammaOptTest, BernoulliUniformAtNOne) {
  BayesConfig cfg;
  const BoundReport r = BayesGammaOptLb(cfg, BuIgammaClosedN1);
  // Continuous optimum 2/27 at gamma = 4/3, zeta = 1/6.
  EXPECT_NEAR(r.value, 2.0 / 27.0, 2e-4);
  EXPECT_LE(r.value, 2.0 / 27.0);
  EXPECT_NEAR(r.witness.at("gamma"), 4.0 / 3.0, 0.02);
  EXPECT_NEAR(r.witness.at("zeta"), 1.0 / 6.0, 0.01);
  EXPECT_TRUE(OnGrid(cfg.zeta_grid, r.witness.at("zeta")));
  EXPECT_TRUE(OnGrid(cfg.gamma_grid, r.witness.at("gamma")));
  const BoundReport mi =
      BayesXuRaginsky(UniformAbsoluteLossSmallBall, kLn2 - 0.5, DefaultZetaGrid());
  EXPECT_GT(r.value, mi.value);
}

TEST(BayesGammaOptTest, Specializations) {
  BayesConfig cfg;
  // I = 0: optimum sits at gamma = 1, value sup zeta (1 - 2 zeta) = 1/8.
  cfg.gamma_grid = Grid{0.0, 4.0, 801, false};
  const BoundReport r = BayesGammaOptLb(cfg, [](double) { return 0.0; });
  EXPECT_NEAR(r.value, 0.125, 1e-6);
  EXPECT_DOUBLE_EQ(r.witness.at("gamma"), 1.0);
  // Only gamma = 0 available: bracket is -I_0 <= 0.
  cfg.gamma_grid = Grid{0.0, 0.0, 1, false};
  EXPECT_EQ(BayesGammaOptLb(cfg, [](double) { return 0.0; }).value, 0.0);
}

TEST(BayesGammaOptTest, DominatesFixedGammaOnSharedGrid) {
  // n = 1, delta = 1: BayesEgammaLb at gamma = e^eps is one row of the 2D grid.
  for (int i = 0; i <= 20; ++i) {
    const double eps = 0.1 * i;
    BayesConfig cfg = ConfigFor(BuIgammaClosedN1(std::exp(eps)), 1, eps, 1.0);
    cfg.gamma_grid = Grid{std::exp(eps), std::exp(eps) + 1.0, 2, false};
    const double fixed = BayesEgammaLb(cfg).value;
    const double opt = BayesGammaOptLb(cfg, BuIgammaClosedN1).value;
    EXPECT_GE(opt, fixed) << eps;
  }
}

TEST(HtExponentTest, Examples) {
  EXPECT_EQ(HtExponent(2.0, PrivacyParams(0.0, 0.0)), 0.0);
  EXPECT_EQ(HtExponent(2.0, PrivacyParams(3.0, 1.0)), -2.0);
  EXPECT_NEAR(HtExponent(1.0, PrivacyParams(std::log(2.0), 0.0)), -0.5, 1e-15);
  EXPECT_THROW(HtExponent(-1.0, PrivacyParams(1.0, 0.0)), DomainError);
}

TEST(MiCapTest, Examples) {
  EXPECT_EQ(MiCap(1.3, PrivacyParams(0.0, 0.0)), 0.0);
  EXPECT_EQ(MiCap(1.3, PrivacyParams(2.0, 1.0)), 1.3);
  EXPECT_THROW(MiCap(-0.1, PrivacyParams(2.0, 1.0)), DomainError);
}

TEST(MiCapTest, RandomizedResponseStaysUnderTheCap) {
  for (int i = 0; i <= 100; ++i) {
    const double eps = 0.05 * i;
    const JointDistribution j =
        JointDistribution::FromChannel(Distribution::Uniform(2), RandomizedResponse(eps));
    const double omega = 1.0 / (1.0 + std::exp(eps));
    const double exact = kLn2 - Entropy(Distribution::Bernoulli(omega));
    EXPECT_NEAR(MutualInformation(j), exact, 1e-14);
    EXPECT_LE(exact, MiCap(kLn2, PrivacyParams(eps, 0.0)) + 1e-15);
  }
}

TEST(BoundsPropertyTest, MonotoneInPrivacy) {
  for (double delta : {0.0, 1e-4, 0.1}) {
    double lecam = INFINITY, xr = INFINITY, eg = INFINITY, ht = 0.0, cap = 0.0;
    for (int i = 0; i <= 30; ++i) {
      const double eps = 0.1 * i;
      const PrivacyParams params(eps, delta);
      const double v1 = LeCamPrivate(LeCamConfig{1.0, 0.05, 10, params}).value;
      const double v2 = BayesXuRaginskyPrivate(ConfigFor(0.5, 5, eps, delta)).value;
      const double v3 = BayesEgammaLb(ConfigFor(0.2, 5, eps, delta)).value;
      const double v4 = std::abs(HtExponent(0.7, params));
      const double v5 = MiCap(0.9, params);
      EXPECT_LE(v1, lecam);
      EXPECT_LE(v2, xr);
      EXPECT_LE(v3, eg);
      EXPECT_GE(v4, ht);
      EXPECT_GE(v5, cap);
      lecam = v1, xr = v2, eg = v3, ht = v4, cap = v5;
    }
  }
}

TEST(BoundsPropertyTest, WitnessesOnGridsAndValuesNonnegative) {
  for (int i = 0; i <= 10; ++i) {
    const double eps = 0.3 * i;
    const BayesConfig cfg = ConfigFor(0.4, 3, eps, 1e-3);
    for (const BoundReport& r : {BayesXuRaginskyPrivate(cfg), BayesEgammaLb(cfg)}) {
      EXPECT_GE(r.value, 0.0);
      if (r.witness.count("zeta")) EXPECT_TRUE(OnGrid(cfg.zeta_grid, r.witness.at("zeta")));
    }
  }
}

}  // namespace
}  // namespace ldpkit
