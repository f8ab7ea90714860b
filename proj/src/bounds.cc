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
#include <limits>
#include <numbers>

#include "ldpkit/errors.h"
#include "ldpkit/oracle.h"

namespace ldpkit {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// a * b with 0 * inf = 0: a privacy coefficient of zero silences an infinite
// divergence.
double Scaled(double coefficient, double value) {
  return coefficient == 0.0 ? 0.0 : coefficient * value;
}

void EchoParams(const PrivacyParams& params, BoundReport& report) {
  report.inputs["epsilon"] = params.epsilon();
  report.inputs["delta"] = params.delta();
}

void EchoGrid(const char* name, const Grid& grid, BoundReport& report) {
  const std::string prefix(name);
  report.inputs[prefix + "_lo"] = grid.lo;
  report.inputs[prefix + "_hi"] = grid.hi;
  report.inputs[prefix + "_steps"] = grid.steps;
  report.inputs[prefix + "_log_spaced"] = grid.log_spaced ? 1.0 : 0.0;
}

void MarkVacuous(BoundReport& report) {
  if (report.value <= 0.0) {
    report.value = 0.0;
    report.flags.emplace_back(kFlagVacuous);
  }
}

// Shared zeta-grid maximization; objective returns -inf on infeasible points.
template <typename F>
void MaximizeOverZeta(const Grid& zeta_grid, F&& objective, BoundReport& report) {
  const std::vector<double> zetas = zeta_grid.Points();
  const GridArgmax best = GridMax(zetas, objective);
  EchoGrid("zeta", zeta_grid, report);
  if (best.value == kNegInf) {
    report.value = 0.0;
    report.flags.emplace_back(kFlagEmptyFeasibleGrid);
    return;
  }
  report.value = best.value;
  report.witness["zeta"] = best.argmax;
  MarkVacuous(report);
}

void CheckPositiveN(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
}

}  // namespace

bool BoundReport::HasFlag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

void LeCamConfig::Validate() const {
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  if (!(kl_p0_p1 >= 0.0)) throw DomainError("kl must be >= 0");
  CheckPositiveN(n);
}

void FanoConfig::Validate() const {
  if (v_count < 2) throw DomainError("v_count must be >= 2");
  if (!(avg_pairwise_kl >= 0.0)) throw DomainError("avg_pairwise_kl must be >= 0");
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  CheckPositiveN(n);
  if (mi_xv && !(*mi_xv >= 0.0)) throw DomainError("mi_xv must be >= 0");
}

void BayesConfig::Validate() const {
  if (!small_ball) throw DomainError("small-ball function is required");
  if (!(info_value >= 0.0)) throw DomainError("info_value must be >= 0");
  CheckPositiveN(n);
  zeta_grid.Validate();
  gamma_grid.Validate();
  if (zeta_grid.steps < 2 || gamma_grid.steps < 2) {
    throw DomainError("optimization grids need at least 2 points");
  }
}

double UniformAbsoluteLossSmallBall(double zeta) {
  return std::min(2.0 * zeta, 1.0);
}

Grid DefaultZetaGrid() { return Grid{1e-4, 0.5, 2000, true}; }
Grid DefaultGammaGrid() { return Grid{0.0, 4.0, 800, false}; }

BoundReport LeCamPrivate(const LeCamConfig& config) {
  config.Validate();
  BoundReport report;
  report.bound_name = "lecam_private";
  report.inputs["tau"] = config.tau;
  report.inputs["kl"] = config.kl_p0_p1;
  report.inputs["n"] = config.n;
  EchoParams(config.params, report);
  const double phi = Phi(config.params);
  report.value = config.tau / 2.0 *
                 (1.0 - std::sqrt(Scaled(config.n * phi, config.kl_p0_p1) / 2.0));
  MarkVacuous(report);
  return report;
}

double LeCamNonPrivate(double tau, double kl_p0_p1, int n) {
  const double value = tau / 2.0 * (1.0 - std::sqrt(n * kl_p0_p1 / 2.0));
  return std::max(value, 0.0);
}

BoundReport MomentEstimationLb(double k_moment, int n, const PrivacyParams& params) {
  if (!(k_moment > 1.0)) throw DomainError("moment order k must be > 1");
  CheckPositiveN(n);
  BoundReport report;
  report.bound_name = "moment_estimation_lb";
  report.inputs["k"] = k_moment;
  report.inputs["n"] = n;
  EchoParams(params, report);
  report.flags.emplace_back(kFlagExplicitConstant);
  const double phi = Phi(params);
  if (phi <= 0.0) {
    report.value = 1.0;
    report.flags.emplace_back(kFlagTrivial);
    return report;
  }
  const double omega =
      std::min(1.0, -std::expm1(std::log(7.0 / 8.0) / std::sqrt(n)) / phi);
  const double exponent = 2.0 * (k_moment - 1.0) / k_moment;
  const double tv_bound =
      std::sqrt(2.0) * std::sqrt(-std::expm1(n * std::log1p(-omega * phi)));
  report.value = std::pow(omega, exponent) * std::max(0.0, 1.0 - tv_bound);
  report.witness["omega"] = omega;
  MarkVacuous(report);
  return report;
}

double FanoMiUpper(const FanoConfig& config) {
  config.Validate();
  const double phi_n = PhiN(config.params, config.n);
  if (config.mi_xv) return Scaled(phi_n, *config.mi_xv);
  return Scaled(config.n * phi_n, config.avg_pairwise_kl);
}

BoundReport FanoLb(const FanoConfig& config) {
  config.Validate();
  BoundReport report;
  report.bound_name = "fano_lb";
  report.inputs["v_count"] = config.v_count;
  report.inputs["avg_pairwise_kl"] = config.avg_pairwise_kl;
  report.inputs["tau"] = config.tau;
  report.inputs["n"] = config.n;
  if (config.mi_xv) report.inputs["mi_xv"] = *config.mi_xv;
  EchoParams(config.params, report);
  const double mi = FanoMiUpper(config);
  report.inputs["mi_upper"] = mi;
  report.value =
      config.tau * (1.0 - (mi + kLn2) / std::log(static_cast<double>(config.v_count)));
  MarkVacuous(report);
  return report;
}

double FanoNonPrivate(double tau, double mi_xv, int v_count) {
  if (v_count < 2) throw DomainError("v_count must be >= 2");
  const double value =
      tau * (1.0 - (mi_xv + kLn2) / std::log(static_cast<double>(v_count)));
  return std::max(value, 0.0);
}

double DuchiMiCoefficient(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  return 2.0 * std::expm1(epsilon);
}

BoundReport HighDimMeanLb(int d, double r, int n, const PrivacyParams& params) {
  if (d < 1) throw DomainError("d must be >= 1");
  if (!(r > 0.0)) throw DomainError("r must be > 0");
  CheckPositiveN(n);
  BoundReport report;
  report.bound_name = "highdim_mean_lb";
  report.inputs["d"] = d;
  report.inputs["r"] = r;
  report.inputs["n"] = n;
  EchoParams(params, report);
  report.flags.emplace_back(kFlagExplicitConstant);
  const double phi_n = PhiN(params, n);
  if (phi_n <= 0.0) {
    report.value = 0.0;
    report.flags.emplace_back(kFlagTrivial);
    return report;
  }
  const double effective_n = n * phi_n;
  // The packing argument needs k >= 16.
  const double k = std::max(16.0, std::min(std::floor(effective_n), static_cast<double>(d)));
  const double omega = std::min(1.0, k / (50.0 * effective_n));
  const double bracket = 1.0 - 16.0 * (1.0 + effective_n * omega) * kLn2 / k;
  report.value = r * r * omega * omega / k * std::max(0.0, bracket);
  report.witness["omega"] = omega;
  report.witness["k"] = k;
  MarkVacuous(report);
  return report;
}

BoundReport BayesXuRaginskyPrivate(const BayesConfig& config) {
  config.Validate();
  BoundReport report;
  report.bound_name = "bayes_xu_raginsky_private";
  report.inputs["info_value"] = config.info_value;
  report.inputs["n"] = config.n;
  EchoParams(config.params, report);
  const double numerator =
      Scaled(PhiN(config.params, config.n), config.info_value) + kLn2;
  MaximizeOverZeta(
      config.zeta_grid,
      [&](double zeta) {
        const double ball = config.small_ball(zeta);
        if (!(ball < 1.0)) return kNegInf;
        const double bracket = 1.0 - numerator / std::log(1.0 / ball);
        return zeta * std::max(0.0, bracket);
      },
      report);
  return report;
}

BoundReport BayesXuRaginsky(const SmallBallFunction& small_ball, double mi,
                            const Grid& zeta_grid) {
  if (!small_ball) throw DomainError("small-ball function is required");
  if (!(mi >= 0.0)) throw DomainError("mutual information must be >= 0");
  BoundReport report;
  report.bound_name = "bayes_xu_raginsky";
  report.inputs["info_value"] = mi;
  const double numerator = mi + kLn2;
  MaximizeOverZeta(
      zeta_grid,
      [&](double zeta) {
        const double ball = small_ball(zeta);
        if (!(ball < 1.0)) return kNegInf;
        const double bracket = 1.0 - numerator / std::log(1.0 / ball);
        return zeta * std::max(0.0, bracket);
      },
      report);
  return report;
}

BoundReport BayesEgammaLb(const BayesConfig& config) {
  config.Validate();
  BoundReport report;
  report.bound_name = "bayes_egamma_lb";
  report.inputs["info_value"] = config.info_value;
  report.inputs["n"] = config.n;
  EchoParams(config.params, report);
  const double coefficient =
      config.n == 1 ? config.params.delta() : PhiN(config.params, config.n);
  const double gamma = config.params.gamma();
  report.inputs["coefficient"] = coefficient;
  const double information_term = Scaled(coefficient, config.info_value);
  MaximizeOverZeta(
      config.zeta_grid,
      [&](double zeta) {
        const double bracket =
            1.0 - information_term - Scaled(gamma, config.small_ball(zeta));
        return zeta * std::max(0.0, bracket);
      },
      report);
  return report;
}

BoundReport BayesGammaOptLb(const BayesConfig& config, const IgammaFunction& igamma) {
  if (!igamma) throw DomainError("I_gamma function is required");
  if (!config.small_ball) throw DomainError("small-ball function is required");
  config.zeta_grid.Validate();
  config.gamma_grid.Validate();
  BoundReport report;
  report.bound_name = "bayes_gamma_opt_lb";
  const std::vector<double> zetas = config.zeta_grid.Points();
  const std::vector<double> gammas = config.gamma_grid.Points();
  if (gammas.front() < 0.0) throw DomainError("gamma grid must be >= 0");
  std::vector<double> informations(gammas.size());
  for (std::size_t j = 0; j < gammas.size(); ++j) informations[j] = igamma(gammas[j]);
  std::vector<double> balls(zetas.size());
  for (std::size_t i = 0; i < zetas.size(); ++i) balls[i] = config.small_ball(zetas[i]);

  // Objective over (zeta index, gamma index) so the I_gamma table is reused.
  std::vector<double> zeta_index(zetas.size());
  std::vector<double> gamma_index(gammas.size());
  for (std::size_t i = 0; i < zetas.size(); ++i) zeta_index[i] = static_cast<double>(i);
  for (std::size_t j = 0; j < gammas.size(); ++j) gamma_index[j] = static_cast<double>(j);
  const GridArgmax2 best = GridMax(zeta_index, gamma_index, [&](double zi, double gj) {
    const auto i = static_cast<std::size_t>(zi);
    const auto j = static_cast<std::size_t>(gj);
    const double gamma = gammas[j];
    const double bracket = 1.0 - informations[j] - Scaled(gamma, balls[i]) -
                           std::max(1.0 - gamma, 0.0);
    return zetas[i] * std::max(0.0, bracket);
  });
  EchoGrid("zeta", config.zeta_grid, report);
  EchoGrid("gamma", config.gamma_grid, report);
  report.value = best.value;
  report.witness["zeta"] = zetas[best.index_x];
  report.witness["gamma"] = gammas[best.index_y];
  MarkVacuous(report);
  return report;
}

double HtExponent(double kl_p0_p1, const PrivacyParams& params) {
  if (!(kl_p0_p1 >= 0.0)) throw DomainError("kl must be >= 0");
  const double scaled = Scaled(Phi(params), kl_p0_p1);
  return scaled == 0.0 ? 0.0 : -scaled;
}

double MiCap(double entropy_x, const PrivacyParams& params) {
  if (!(entropy_x >= 0.0)) throw DomainError("entropy must be >= 0");
  return Scaled(Phi(params), entropy_x);
}

}  // namespace ldpkit
