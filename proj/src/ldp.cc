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

#include "ldpkit/ldp.h"

#include <cmath>
#include <limits>

#include "ldpkit/errors.h"
#include "ldpkit/sampling.h"

namespace ldpkit {
namespace {

constexpr double kLdpSlack = 1e-12;
constexpr double kEpsilonTolerance = 1e-9;
constexpr double kVerifierSlack = 1e-10;
constexpr double kRatioFloor = 1e-12;

}  // namespace

double DeltaAt(const Kernel& k, double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  return EtaGammaTwoPoint(k, std::exp(epsilon)).eta_gamma;
}

bool IsLdp(const Kernel& k, const PrivacyParams& params) {
  return DeltaAt(k, params.epsilon()) <= params.delta() + kLdpSlack;
}

double InfiniteEpsilonResidual(const Kernel& k) {
  double residual = 0.0;
  for (Index x = 0; x < k.input_size(); ++x) {
    for (Index y = 0; y < k.input_size(); ++y) {
      double mass = 0.0;
      for (Index z = 0; z < k.output_size(); ++z) {
        if (k.rows()(y, z) == 0.0) mass += k.rows()(x, z);
      }
      residual = std::max(residual, mass);
    }
  }
  return residual;
}

TightestEpsilon TightestEpsilonFor(const Kernel& k, double delta,
                                   double epsilon_max) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError("delta must lie in [0,1]");
  }
  if (!(epsilon_max > 0.0)) throw DomainError("epsilon_max must be > 0");
  const auto achieves = [&](double eps) {
    return DeltaAt(k, eps) <= delta + kLdpSlack;
  };
  if (achieves(0.0)) return {0.0, false};
  if (!achieves(epsilon_max)) {
    if (InfiniteEpsilonResidual(k) > delta + kLdpSlack) {
      return {std::numeric_limits<double>::infinity(), false};
    }
    return {epsilon_max, true};
  }
  double lo = 0.0;
  double hi = epsilon_max;
  while (hi - lo > kEpsilonTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (achieves(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, false};
}

PrivacyProfile ComputeProfile(const Kernel& k, const Grid& epsilon_grid,
                              std::string kernel_id) {
  PrivacyProfile profile;
  profile.kernel_id = std::move(kernel_id);
  for (double eps : epsilon_grid.Points()) {
    if (!(eps >= 0.0)) throw DomainError("profile grid must have epsilon >= 0");
    profile.points.emplace_back(eps, DeltaAt(k, eps));
  }
  return profile;
}

EquivalenceReport VerifyEquivalence(const Kernel& k, const PrivacyParams& params,
                                    int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  const double gamma = params.gamma();
  EquivalenceReport report;
  report.delta_tight = DeltaAt(k, params.epsilon());
  report.certified = report.delta_tight <= params.delta() + kLdpSlack;

  const auto check = [&](const Vector<double>& p, const Vector<double>& q) {
    const Vector<double> pk = k.rows().transpose() * p;
    const Vector<double> qk = k.rows().transpose() * q;
    const double out = Egamma(pk, qk, gamma);
    const double in = Egamma(p, q, gamma);
    ++report.pairs_checked;
    if (in > kRatioFloor) {
      const double ratio = out / in;
      if (ratio > report.max_ratio || report.ratio_witness_p.size() == 0) {
        report.max_ratio = ratio;
        report.ratio_witness_p = p;
        report.ratio_witness_q = q;
      }
    }
    const double excess = out - params.delta() * in;
    if (excess > kVerifierSlack && excess > report.worst_excess) {
      report.violation_found = true;
      report.worst_excess = excess;
      report.violation_p = p;
      report.violation_q = q;
    }
  };

  const Index n = k.input_size();
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 engine = TrialEngine(seed, static_cast<std::uint64_t>(t));
    const Vector<double> p = SampleDirichlet(n, 1.0, engine);
    const Vector<double> q = SampleDirichlet(n, 1.0, engine);
    check(p, q);
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      check(Vector<double>::Unit(n, x), Vector<double>::Unit(n, y));
    }
  }
  report.consistent = report.certified != report.violation_found;
  return report;
}

}  // namespace ldpkit
