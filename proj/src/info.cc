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

#include "ldpkit/info.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ldpkit {
namespace {

double LogBinomial(int n, int s) {
  return std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0);
}

// theta^s (1 - theta)^{n-s}, with 0^0 = 1.
double SequenceLikelihood(int n, int s, double theta) {
  return std::pow(theta, s) * std::pow(1.0 - theta, n - s);
}

}  // namespace

void BernoulliUniformModel::Validate() const {
  if (n < 1) throw DomainError("Bernoulli-uniform model requires n >= 1");
  if (panels < 2 || panels % 2 != 0) {
    throw DomainError("quadrature panels must be even and >= 2");
  }
}

double BuMarginal(int n, int s) {
  if (n < 0 || s < 0 || s > n) throw DomainError("need 0 <= s <= n");
  return std::exp(-LogBinomial(n, s)) / (n + 1.0);
}

double BuIgamma(const BernoulliUniformModel& model, double gamma) {
  model.Validate();
  if (!(gamma >= 0.0)) throw DomainError("I_gamma requires gamma >= 0");
  const int n = model.n;
  double sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    // Likelihood ratio of a single sequence: (n+1) C(n,s) theta^s (1-theta)^{n-s}.
    const double scale = (n + 1.0) * std::exp(LogBinomial(n, s));
    sum += CompositeSimpson(
        [&](double theta) {
          return std::max(scale * SequenceLikelihood(n, s, theta) - gamma, 0.0);
        },
        0.0, 1.0, model.panels);
  }
  return std::max(sum / (n + 1.0) - std::max(1.0 - gamma, 0.0), 0.0);
}

double BuIgammaClosedN1(double gamma) {
  if (!(gamma >= 0.0)) throw DomainError("I_gamma requires gamma >= 0");
  if (gamma <= 1.0) return 0.25 * gamma * gamma;
  if (gamma <= 2.0) return 0.25 * (gamma - 2.0) * (gamma - 2.0);
  return 0.0;
}

double BuMutualInformation(const BernoulliUniformModel& model) {
  model.Validate();
  const int n = model.n;
  std::vector<double> log_binom(n + 1);
  for (int s = 0; s <= n; ++s) log_binom[s] = LogBinomial(n, s);
  const double log_n1 = std::log(n + 1.0);
  return CompositeSimpson(
      [&](double theta) {
        // sum_s C(n,s) b_s log((n+1) C(n,s) b_s), b_s = theta^s (1-theta)^{n-s}.
        double kl = 0.0;
        for (int s = 0; s <= n; ++s) {
          const double b = SequenceLikelihood(n, s, theta);
          if (b <= 0.0) continue;
          const double mass = std::exp(log_binom[s]) * b;
          kl += mass * (log_n1 + log_binom[s] + std::log(b));
        }
        return kl;
      },
      0.0, 1.0, model.panels);
}

}  // namespace ldpkit
