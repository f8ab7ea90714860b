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

#ifndef LDPKIT_ORACLE_H_
#define LDPKIT_ORACLE_H_

// Brute-force reference computations. Nothing here calls the closed forms in
// contraction.h or ldp.h; the tests compare the two routes.

#include <cstddef>
#include <cstdint>
#include <span>

#include "ldpkit/dist.h"
#include "ldpkit/errors.h"
#include "ldpkit/kernel.h"

namespace ldpkit {

struct SearchConfig {
  std::uint64_t seed = 20210119;
  int trials = 1000;
  bool include_point_masses = true;
  double dirichlet_alpha = 1.0;

  void Validate() const;
};

struct BruteEtaEstimate {
  double value = 0.0;  // max sampled D_f(PK||QK) / D_f(P||Q)
  Vector<double> witness_p;
  Vector<double> witness_q;
  std::int64_t pairs_evaluated = 0;
  std::int64_t pairs_skipped = 0;  // D_f(P||Q) < 1e-12
};

// Lower estimate of eta_f(K) = sup D_f(PK||QK) / D_f(P||Q) over sampled
// pairs: Dirichlet(alpha) draws, every ordered pair of point masses (when
// enabled), and for KL / chi^2 near-coincident pairs
// (P, (1-h) P + h R), h in {1e-3, 1e-4}, around the uniform distribution and
// sampled bases. For TV and E_gamma with gamma >= 1 the point masses attain
// the supremum, so the estimate is exact there.
BruteEtaEstimate BruteEtaF(const Kernel& k, const FGenerator& f,
                           const SearchConfig& config);

struct SetSupremum {
  double value = 0.0;
  Index x = 0;
  Index x_prime = 0;
  std::uint64_t event_mask = 0;  // bit z set <=> z in the maximizing event
};

// max over x, x' and all 2^|Z| events A of K(A|x) - e^eps K(A|x'), by
// exhaustive enumeration. Throws CapacityError when |Z| > kMaxExhaustiveOutputs.
inline constexpr Index kMaxExhaustiveOutputs = 20;
SetSupremum BruteProfileCheck(const Kernel& k, double epsilon);

struct GridArgmax {
  double argmax = 0.0;
  double value = 0.0;
  std::size_t index = 0;
};

// Deterministic scan of `objective` over `grid`; the first (smallest-index)
// maximizer wins ties. Throws DomainError on an empty grid.
template <typename F>
GridArgmax GridMax(std::span<const double> grid, F&& objective) {
  if (grid.empty()) throw DomainError("grid_max needs a nonempty grid");
  GridArgmax best{grid[0], objective(grid[0]), 0};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double value = objective(grid[i]);
    if (value > best.value) best = {grid[i], value, i};
  }
  return best;
}

struct GridArgmax2 {
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  double value = 0.0;
  std::size_t index_x = 0;
  std::size_t index_y = 0;
};

// Two-variable version; ties resolve to the smallest (index_x, index_y) in
// lexicographic order.
template <typename F>
GridArgmax2 GridMax(std::span<const double> grid_x, std::span<const double> grid_y,
                    F&& objective) {
  if (grid_x.empty() || grid_y.empty()) {
    throw DomainError("grid_max needs nonempty grids");
  }
  GridArgmax2 best{grid_x[0], grid_y[0], objective(grid_x[0], grid_y[0]), 0, 0};
  for (std::size_t i = 0; i < grid_x.size(); ++i) {
    for (std::size_t j = 0; j < grid_y.size(); ++j) {
      if (i == 0 && j == 0) continue;
      const double value = objective(grid_x[i], grid_y[j]);
      if (value > best.value) best = {grid_x[i], grid_y[j], value, i, j};
    }
  }
  return best;
}

}  // namespace ldpkit

#endif  // LDPKIT_ORACLE_H_
