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

#ifndef LDPKIT_CONTRACTION_H_
#define LDPKIT_CONTRACTION_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "ldpkit/dist.h"
#include "ldpkit/errors.h"
#include "ldpkit/kernel.h"

namespace ldpkit {

// The (epsilon, delta) pair of approximate local differential privacy.
class PrivacyParams {
 public:
  PrivacyParams(double epsilon, double delta) : epsilon_(epsilon), delta_(delta) {
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
    if (!(delta >= 0.0 && delta <= 1.0)) {
      throw DomainError("delta must lie in [0,1]");
    }
  }

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  double gamma() const { return std::exp(epsilon_); }

 private:
  double epsilon_;
  double delta_;
};

// phi(eps, delta) = 1 - (1 - delta) e^{-eps}: the contraction bound shared by
// every f-divergence under an (eps, delta)-LDP kernel.
inline double Phi(const PrivacyParams& params) {
  return -std::expm1(std::log1p(-params.delta()) - params.epsilon());
}

// phi_n(eps, delta) = 1 - e^{-n eps} (1 - delta)^n = 1 - (1 - phi)^n.
inline double PhiN(const PrivacyParams& params, int n) {
  if (n < 1) throw DomainError("phi_n requires n >= 1");
  return -std::expm1(n * (std::log1p(-params.delta()) - params.epsilon()));
}

// Upper bound on eta_TV implied by eta_gamma: 1 - (1 - eta_gamma) / gamma.
inline double EtaTvFromEtaGamma(double eta_gamma, double gamma) {
  if (!(eta_gamma >= 0.0 && eta_gamma <= 1.0)) {
    throw DomainError("eta_gamma must lie in [0,1]");
  }
  if (!(gamma >= 1.0)) throw DomainError("gamma must be >= 1");
  return 1.0 - (1.0 - eta_gamma) / gamma;
}

// eta_f(K) <= phi(eps, delta) for every f and every (eps, delta)-LDP K.
inline double EtaFUpperLdp(const PrivacyParams& params) { return Phi(params); }

// eta_f(K^{(x)n}) <= phi_n(eps, delta).
inline double EtaFTensorUpper(const PrivacyParams& params, int n) {
  return PhiN(params, n);
}

// eta_KL(BSC(omega)) = (1 - 2 omega)^2. Some texts print this as
// (1 - 2 omega^2); that reading disagrees with the randomized-response value
// ((e^eps - 1) / (e^eps + 1))^2 obtained by substituting omega = 1/(1+e^eps).
inline double EtaKlBsc(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw DomainError("BSC crossover must lie in [0,1]");
  }
  const double r = 1.0 - 2.0 * omega;
  return r * r;
}

// ((e^eps - 1) / (e^eps + 1))^2 = tanh^2(eps / 2).
inline double EtaKlRandomizedResponse(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const double t = std::tanh(0.5 * epsilon);
  return t * t;
}

struct ContractionReport {
  double eta_gamma = 0.0;
  double gamma = 1.0;
  double eta_tv = 0.0;
  // Ordered input pair (x, x') attaining eta_gamma; lexicographically
  // smallest among ties.
  std::pair<Index, Index> argmax_pair{0, 0};
  std::map<std::string, double> upper_bounds;
};

namespace internal {

// max over ordered pairs of divergence(row_x, row_x'), first maximum wins.
template <typename Scalar, typename Divergence>
std::pair<Scalar, std::pair<Index, Index>> ScanRowPairs(
    const BasicKernel<Scalar>& k, Divergence&& divergence) {
  Scalar best(0);
  std::pair<Index, Index> arg{0, 0};
  bool first = true;
  for (Index x = 0; x < k.input_size(); ++x) {
    for (Index y = 0; y < k.input_size(); ++y) {
      const Scalar value = divergence(k.row(x), k.row(y));
      if (first || value > best) {
        best = value;
        arg = {x, y};
        first = false;
      }
    }
  }
  return {best, arg};
}

}  // namespace internal

// Dobrushin's coefficient: max_{x,x'} TV(K(.|x), K(.|x')).
template <typename Scalar>
Scalar EtaTvDobrushin(const BasicKernel<Scalar>& k) {
  return internal::ScanRowPairs(k, [](const auto& p, const auto& q) {
           return TotalVariation(p, q);
         }).first;
}

// eta_gamma(K) = max_{x,x'} E_gamma(K(.|x) || K(.|x')) for gamma >= 1.
// Costs O(|X|^2 |Z|).
template <typename Scalar>
ContractionReport EtaGammaTwoPoint(const BasicKernel<Scalar>& k, double gamma) {
  if (!(gamma >= 1.0)) {
    throw DomainError("two-point formula for eta_gamma requires gamma >= 1");
  }
  const auto [eta, arg] = internal::ScanRowPairs(
      k, [gamma](const auto& p, const auto& q) {
        return Egamma(p, q, Scalar(gamma));
      });
  ContractionReport report;
  report.eta_gamma = static_cast<double>(eta);
  report.gamma = gamma;
  report.eta_tv = static_cast<double>(EtaTvDobrushin(k));
  report.argmax_pair = arg;
  if (std::isfinite(gamma)) {
    report.upper_bounds["eta_tv_from_eta_gamma"] =
        EtaTvFromEtaGamma(std::min(report.eta_gamma, 1.0), gamma);
  }
  return report;
}

}  // namespace ldpkit

#endif  // LDPKIT_CONTRACTION_H_
