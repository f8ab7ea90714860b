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

#ifndef LDPKIT_LDP_H_
#define LDPKIT_LDP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ldpkit/contraction.h"
#include "ldpkit/grid.h"
#include "ldpkit/kernel.h"

namespace ldpkit {

// Default upper end of the epsilon search in TightestEpsilon.
inline constexpr double kDefaultEpsilonMax = 50.0;

// Smallest delta for which `k` is (epsilon, delta)-LDP. This is
// eta_{e^epsilon}(K), the largest E_{e^eps} divergence between two rows.
double DeltaAt(const Kernel& k, double epsilon);

// True when delta_at(k, eps) <= delta + 1e-12.
bool IsLdp(const Kernel& k, const PrivacyParams& params);

// lim_{eps -> inf} delta_at(k, eps): the largest mass a row puts on outputs
// another row can never produce.
double InfiniteEpsilonResidual(const Kernel& k);

struct TightestEpsilon {
  double epsilon = 0.0;  // +infinity when no finite epsilon achieves delta
  bool saturated = false;  // true when the search stopped at epsilon_max
};

// Smallest epsilon with delta_at(k, epsilon) <= delta, found by bisection to
// an absolute tolerance of 1e-9 on [0, epsilon_max].
TightestEpsilon TightestEpsilonFor(const Kernel& k, double delta,
                                   double epsilon_max = kDefaultEpsilonMax);

// The curve epsilon -> delta_at(k, epsilon) sampled on a grid.
struct PrivacyProfile {
  std::string kernel_id;
  std::vector<std::pair<double, double>> points;  // (epsilon, delta)
};

PrivacyProfile ComputeProfile(const Kernel& k, const Grid& epsilon_grid,
                              std::string kernel_id);

// Outcome of the sampled check of
//   K is (eps, delta)-LDP  <=>  E_g(PK || QK) <= delta E_g(P || Q) for all P, Q
// with g = e^eps.
struct EquivalenceReport {
  bool certified = false;  // IsLdp(k, params)
  double delta_tight = 0.0;
  std::int64_t pairs_checked = 0;
  // Largest E_g(PK||QK) / E_g(P||Q) over pairs with E_g(P||Q) > 1e-12.
  double max_ratio = 0.0;
  Vector<double> ratio_witness_p;
  Vector<double> ratio_witness_q;
  // A pair with E_g(PK||QK) > delta E_g(P||Q) + 1e-10, if any was found.
  bool violation_found = false;
  double worst_excess = 0.0;
  Vector<double> violation_p;
  Vector<double> violation_q;
  // certified == !violation_found.
  bool consistent = false;
};

// Draws `trials` Dirichlet(1, ..., 1) pairs with per-trial engines derived
// from `seed`, then appends every ordered pair of point masses. The point-mass
// sweep attains the two-point supremum, so the converse check is exact.
EquivalenceReport VerifyEquivalence(const Kernel& k, const PrivacyParams& params,
                                    int trials, std::uint64_t seed);

}  // namespace ldpkit

#endif  // LDPKIT_LDP_H_
