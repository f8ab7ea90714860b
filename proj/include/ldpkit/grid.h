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

#ifndef LDPKIT_GRID_H_
#define LDPKIT_GRID_H_

#include <string>
#include <vector>

namespace ldpkit {

// A finite grid of `steps` points spanning [lo, hi], evenly spaced either
// linearly or in log scale. A single-step grid is the point {lo}.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  bool log_spaced = false;

  std::vector<double> Points() const;

  // Throws DomainError unless steps >= 1, lo <= hi (lo < hi when steps > 1),
  // and lo > 0 for log grids.
  void Validate() const;

  // Parses "lo:hi:steps" into a linear grid.
  static Grid Parse(const std::string& text);
};

}  // namespace ldpkit

#endif  // LDPKIT_GRID_H_
