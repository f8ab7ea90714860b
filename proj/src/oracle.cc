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

#include "ldpkit/oracle.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ldpkit/sampling.h"

namespace ldpkit {
namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr double kNearSteps[] = {1e-3, 1e-4};
constexpr int kNearBases = 32;
constexpr int kNearRandomDirections = 8;

class RatioTracker {
 public:
  RatioTracker(const Kernel& k, const FGenerator& f) : k_(k), f_(f) {}

  void Offer(const Vector<double>& p, const Vector<double>& q) {
    const double in = FDivergence(p, q, f_);
    if (!(in >= kDenominatorFloor) || !std::isfinite(in)) {
      ++estimate_.pairs_skipped;
      return;
    }
    const Vector<double> pk = k_.rows().transpose() * p;
    const Vector<double> qk = k_.rows().transpose() * q;
    const double ratio = FDivergence(pk, qk, f_) / in;
    ++estimate_.pairs_evaluated;
    if (estimate_.witness_p.size() == 0 || ratio > estimate_.value) {
      estimate_.value = ratio;
      estimate_.witness_p = p;
      estimate_.witness_q = q;
    }
  }

  BruteEtaEstimate Result() const { return estimate_; }

 private:
  const Kernel& k_;
  const FGenerator& f_;
  BruteEtaEstimate estimate_;
};

bool UsesLocalPairs(const FGenerator& f) {
  return f.kind == FGenerator::Kind::kKL || f.kind == FGenerator::Kind::kChiSquared;
}

}  // namespace

void SearchConfig::Validate() const {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (!(dirichlet_alpha > 0.0)) throw DomainError("dirichlet_alpha must be > 0");
}

BruteEtaEstimate BruteEtaF(const Kernel& k, const FGenerator& f,
                           const SearchConfig& config) {
  config.Validate();
  const Index n = k.input_size();
  RatioTracker tracker(k, f);

  std::vector<Vector<double>> bases;
  for (int t = 0; t < config.trials; ++t) {
    std::mt19937_64 engine = TrialEngine(config.seed, static_cast<std::uint64_t>(t));
    Vector<double> p = SampleDirichlet(n, config.dirichlet_alpha, engine);
    Vector<double> q = SampleDirichlet(n, config.dirichlet_alpha, engine);
    tracker.Offer(p, q);
    if (static_cast<int>(bases.size()) < kNearBases) bases.push_back(std::move(p));
  }

  if (config.include_point_masses) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (x != y) tracker.Offer(Vector<double>::Unit(n, x), Vector<double>::Unit(n, y));
      }
    }
  }

  if (UsesLocalPairs(f)) {
    bases.insert(bases.begin(), Vector<double>::Constant(n, 1.0 / n));
    std::uint64_t stream = static_cast<std::uint64_t>(config.trials);
    for (const Vector<double>& base : bases) {
      std::vector<Vector<double>> targets;
      for (Index x = 0; x < n; ++x) targets.push_back(Vector<double>::Unit(n, x));
      std::mt19937_64 engine = TrialEngine(config.seed, stream++);
      for (int d = 0; d < kNearRandomDirections; ++d) {
        targets.push_back(SampleDirichlet(n, config.dirichlet_alpha, engine));
      }
      for (const Vector<double>& target : targets) {
        for (double h : kNearSteps) {
          tracker.Offer(base, (1.0 - h) * base + h * target);
        }
      }
    }
  }
  return tracker.Result();
}

SetSupremum BruteProfileCheck(const Kernel& k, double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  const Index outputs = k.output_size();
  if (outputs > kMaxExhaustiveOutputs) {
    throw CapacityError("exhaustive event search over " + std::to_string(outputs) +
                        " outputs exceeds the cap of " +
                        std::to_string(kMaxExhaustiveOutputs));
  }
  const double gamma = std::exp(epsilon);
  const std::uint64_t events = std::uint64_t{1} << outputs;
  std::vector<double> mass_x(events);
  std::vector<double> mass_y(events);

  // K(A|x) for every event A, built by adding the lowest member to the
  // event without it.
  const auto fill = [&](Index row, std::vector<double>& mass) {
    mass[0] = 0.0;
    for (std::uint64_t a = 1; a < events; ++a) {
      const int low = __builtin_ctzll(a);
      mass[a] = mass[a & (a - 1)] + k.rows()(row, low);
    }
  };

  SetSupremum best;
  for (Index x = 0; x < k.input_size(); ++x) {
    fill(x, mass_x);
    for (Index y = 0; y < k.input_size(); ++y) {
      fill(y, mass_y);
      for (std::uint64_t a = 0; a < events; ++a) {
        const double value =
            mass_y[a] == 0.0 ? mass_x[a] : mass_x[a] - gamma * mass_y[a];
        if (value > best.value) best = {value, x, y, a};
      }
    }
  }
  return best;
}

}  // namespace ldpkit
