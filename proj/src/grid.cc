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

#include "ldpkit/grid.h"

#include <cmath>
#include <cstdlib>

#include "ldpkit/errors.h"

namespace ldpkit {

void Grid::Validate() const {
  if (steps < 1) throw DomainError("grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("grid bounds must be finite");
  }
  if (steps > 1 && !(lo < hi)) {
    throw DomainError("grid must be strictly increasing (lo < hi)");
  }
  if (log_spaced && !(lo > 0.0)) {
    throw DomainError("log-spaced grid requires lo > 0");
  }
}

std::vector<double> Grid::Points() const {
  Validate();
  std::vector<double> points(steps);
  if (steps == 1) {
    points[0] = lo;
    return points;
  }
  const double a = log_spaced ? std::log(lo) : lo;
  const double b = log_spaced ? std::log(hi) : hi;
  for (int i = 0; i < steps; ++i) {
    const double t = a + (b - a) * static_cast<double>(i) / (steps - 1);
    points[i] = log_spaced ? std::exp(t) : t;
  }
  // Pin the endpoints exactly.
  points.front() = lo;
  points.back() = hi;
  return points;
}

Grid Grid::Parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ParseError("grid must look like lo:hi:steps, got '" + text + "'");
  }
  Grid grid;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, first);
    const std::string hi = text.substr(first + 1, second - first - 1);
    const std::string steps = text.substr(second + 1);
    grid.lo = std::stod(lo, &used);
    if (used != lo.size()) throw ParseError("bad lo");
    grid.hi = std::stod(hi, &used);
    if (used != hi.size()) throw ParseError("bad hi");
    grid.steps = std::stoi(steps, &used);
    if (used != steps.size()) throw ParseError("bad steps");
  } catch (const std::exception&) {
    throw ParseError("grid must look like lo:hi:steps, got '" + text + "'");
  }
  grid.Validate();
  return grid;
}

}  // namespace ldpkit
