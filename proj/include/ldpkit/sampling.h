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

#ifndef LDPKIT_SAMPLING_H_
#define LDPKIT_SAMPLING_H_

#include <cstdint>
#include <random>

#include "ldpkit/dist.h"

namespace ldpkit {

// Engine for trial `trial` of a run seeded with `seed`. Trials are
// independent of one another and of evaluation order.
inline std::mt19937_64 TrialEngine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Dirichlet(alpha, ..., alpha) draw via normalized Gamma variates.
inline Vector<double> SampleDirichlet(Index size, double alpha,
                                      std::mt19937_64& engine) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  Vector<double> v(size);
  double total = 0.0;
  do {
    for (Index i = 0; i < size; ++i) v(i) = gamma(engine);
    total = v.sum();
  } while (!(total > 0.0));
  return v / total;
}

}  // namespace ldpkit

#endif  // LDPKIT_SAMPLING_H_
