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

#ifndef LDPKIT_BOUNDS_H_
#define LDPKIT_BOUNDS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldpkit/contraction.h"
#include "ldpkit/grid.h"

namespace ldpkit {

// Report flags.
inline constexpr std::string_view kFlagVacuous = "vacuous";
inline constexpr std::string_view kFlagTrivial = "trivial";
inline constexpr std::string_view kFlagExplicitConstant = "explicit-constant variant";
inline constexpr std::string_view kFlagEmptyFeasibleGrid = "empty-feasible-grid";

struct BoundReport {
  std::string bound_name;
  double value = 0.0;
  // Optimizer arguments: zeta, gamma, omega, k.
  std::map<std::string, double> witness;
  std::map<std::string, double> inputs;
  std::vector<std::string> flags;

  bool HasFlag(std::string_view flag) const;
};

// Minimax risk via Le Cam: two hypotheses 2*tau apart with D_KL(P0||P1).
struct LeCamConfig {
  double tau = 1.0;
  double kl_p0_p1 = 0.0;  // nats
  int n = 1;
  PrivacyParams params{0.0, 1.0};

  void Validate() const;
};

// Minimax risk via Fano over a 2*tau-packing of size v_count.
struct FanoConfig {
  int v_count = 2;
  double avg_pairwise_kl = 0.0;  // (1/|V|^2) sum_{v,v'} D_KL(P_v||P_v'), nats
  double tau = 1.0;
  int n = 1;
  PrivacyParams params{0.0, 1.0};
  // When set, I(X^n; V) itself; the bound then uses phi_n * I(X^n; V).
  std::optional<double> mi_xv;

  void Validate() const;
};

// zeta -> L(zeta) = sup_t Pr(loss(Theta, t) <= zeta); nondecreasing, in [0,1].
using SmallBallFunction = std::function<double(double)>;

// gamma -> I_gamma(Theta; X^n).
using IgammaFunction = std::function<double(double)>;

// L(zeta) = min{2 zeta, 1}: Theta ~ Uniform[0,1] under absolute loss.
double UniformAbsoluteLossSmallBall(double zeta);

Grid DefaultZetaGrid();  // [1e-4, 0.5], 2000 log-spaced points
Grid DefaultGammaGrid();  // [0, 4], 800 linear points

struct BayesConfig {
  SmallBallFunction small_ball = UniformAbsoluteLossSmallBall;
  // I(Theta; X^n) in nats for the mutual-information bound, or
  // I_{e^eps}(Theta; X^n) for the E_gamma bound.
  double info_value = 0.0;
  int n = 1;
  PrivacyParams params{0.0, 1.0};
  Grid zeta_grid = DefaultZetaGrid();
  Grid gamma_grid = DefaultGammaGrid();

  void Validate() const;
};

// (tau/2) [1 - sqrt(n phi D_KL / 2)], clamped at 0.
BoundReport LeCamPrivate(const LeCamConfig& config);
// (tau/2) [1 - sqrt(n D_KL / 2)], clamped at 0.
double LeCamNonPrivate(double tau, double kl_p0_p1, int n);

// Mean estimation under a k-th moment constraint, squared loss. Evaluates
//   omega^{2(k-1)/k} [1 - sqrt2 sqrt(1 - (1 - omega phi)^n)]
// at omega = min{1, (1 - (7/8)^{1/sqrt n}) / phi}. With phi = 0 the bound is
// the constant 1, flagged trivial.
BoundReport MomentEstimationLb(double k_moment, int n, const PrivacyParams& params);

// n phi_n avg_pairwise_kl, or phi_n I(X^n; V) when mi_xv is set.
double FanoMiUpper(const FanoConfig& config);
// tau [1 - (FanoMiUpper + ln 2) / ln |V|], clamped at 0.
BoundReport FanoLb(const FanoConfig& config);
// tau [1 - (I(X^n;V) + ln 2) / ln |V|], clamped at 0.
double FanoNonPrivate(double tau, double mi_xv, int v_count);

// Per-sample coefficient of the competing pure-LDP MI bound, 2(e^eps - 1).
double DuchiMiCoefficient(double epsilon);

// Mean estimation in a radius-r l2 ball in R^d. Evaluates
//   (r^2 omega^2 / k) [1 - 16 (1 + n omega phi_n) ln 2 / k]
// at k = max(16, min(floor(n phi_n), d)), omega = min{1, k / (50 n phi_n)}.
BoundReport HighDimMeanLb(int d, double r, int n, const PrivacyParams& params);

// sup_zeta zeta [1 - (phi_n I(Theta;X^n) + ln 2) / ln(1/L(zeta))]; grid points
// with L(zeta) >= 1 are infeasible and skipped.
BoundReport BayesXuRaginskyPrivate(const BayesConfig& config);
// The same bound without privacy (phi_n replaced by 1).
BoundReport BayesXuRaginsky(const SmallBallFunction& small_ball, double mi,
                            const Grid& zeta_grid);

// sup_zeta zeta [1 - c I_{e^eps}(Theta;X^n) - e^eps L(zeta)], c = delta when
// n = 1 and c = phi_n otherwise.
BoundReport BayesEgammaLb(const BayesConfig& config);

// Non-private bound optimized over gamma as well:
//   sup_{zeta, gamma} zeta [1 - I_gamma - gamma L(zeta) - (1 - gamma)_+].
// Uses config.small_ball and both grids; info_value and params are ignored.
BoundReport BayesGammaOptLb(const BayesConfig& config, const IgammaFunction& igamma);

// Lower bound on lim (1/n) log beta_n: -phi(eps, delta) D_KL(P0||P1).
double HtExponent(double kl_p0_p1, const PrivacyParams& params);

// sup over (eps, delta)-LDP K of I(X; Z) <= phi(eps, delta) H(X).
double MiCap(double entropy_x, const PrivacyParams& params);

}  // namespace ldpkit

#endif  // LDPKIT_BOUNDS_H_
