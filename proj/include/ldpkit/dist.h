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

#ifndef LDPKIT_DIST_H_
#define LDPKIT_DIST_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Dense>

#include "ldpkit/errors.h"

namespace ldpkit {

// Probability vectors must sum to one within this absolute tolerance.
inline constexpr double kNormalizationTolerance = 1e-12;
// Deviations below this are silently renormalized; larger ones are rejected.
inline constexpr double kRenormalizationLimit = 1e-9;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

namespace internal {

// (1+r) log1p(r) - r, with the series r^2/2 - r^3/6 + ... near 0.
template <typename Scalar>
Scalar KlTerm(Scalar r) {
  using std::abs;
  if (abs(r) < Scalar(1e-2)) {
    Scalar power = r * r;
    Scalar total(0);
    for (int k = 2; k < 12; ++k) {
      total += power / Scalar(k * (k - 1));
      power *= -r;
    }
    return total;
  }
  return (Scalar(1) + r) * std::log1p(r) - r;
}


// Checks that `probs` is a probability vector, renormalizing small drift in
// place. On failure returns a message describing the first violation, else
// an empty string.
template <typename Derived>
std::string NormalizeInPlace(Eigen::MatrixBase<Derived>& probs) {
  using Scalar = typename Derived::Scalar;
  if (probs.size() < 1) return "alphabet must contain at least one symbol";
  for (Index i = 0; i < probs.size(); ++i) {
    const Scalar v = probs(i);
    if (!std::isfinite(static_cast<double>(v))) {
      return "entry " + std::to_string(i) + " is not finite";
    }
    if (v < Scalar(0)) {
      return "entry " + std::to_string(i) + " is negative";
    }
  }
  const Scalar total = probs.sum();
  const double deviation = std::abs(static_cast<double>(total) - 1.0);
  if (deviation <= kNormalizationTolerance) return {};
  if (deviation < kRenormalizationLimit) {
    probs /= total;
    return {};
  }
  return "entries sum to " + std::to_string(static_cast<double>(total)) +
         ", not 1";
}

template <typename DerivedP, typename DerivedQ>
void CheckSameSize(const Eigen::MatrixBase<DerivedP>& p,
                   const Eigen::MatrixBase<DerivedQ>& q) {
  if (p.size() != q.size()) {
    throw DimensionError("alphabet size mismatch: " + std::to_string(p.size()) +
                         " vs " + std::to_string(q.size()));
  }
}

}  // namespace internal

// A probability vector over the finite alphabet {0, ..., size-1}.
template <typename Scalar = double>
class BasicDistribution {
 public:
  using VectorType = Vector<Scalar>;

  // Throws DomainError unless `probs` is nonnegative and sums to 1.
  explicit BasicDistribution(VectorType probs) : probs_(std::move(probs)) {
    const std::string error = internal::NormalizeInPlace(probs_);
    if (!error.empty()) throw DomainError("invalid distribution: " + error);
  }

  static BasicDistribution PointMass(Index size, Index at) {
    if (size < 1 || at < 0 || at >= size) {
      throw DomainError("point mass index out of range");
    }
    VectorType v = VectorType::Zero(size);
    v(at) = Scalar(1);
    return BasicDistribution(std::move(v));
  }

  static BasicDistribution Uniform(Index size) {
    if (size < 1) throw DomainError("uniform distribution needs size >= 1");
    return BasicDistribution(VectorType::Constant(size, Scalar(1) / size));
  }

  // Bernoulli(p) as the vector [1-p, p].
  static BasicDistribution Bernoulli(Scalar p) {
    if (!(p >= Scalar(0) && p <= Scalar(1))) {
      throw DomainError("Bernoulli parameter must lie in [0,1]");
    }
    VectorType v(2);
    v << Scalar(1) - p, p;
    return BasicDistribution(std::move(v));
  }

  const VectorType& probs() const { return probs_; }
  Index size() const { return probs_.size(); }
  Scalar operator[](Index i) const { return probs_(i); }

 private:
  VectorType probs_;
};

using Distribution = BasicDistribution<double>;

// The convex generators supported by FDivergence. Each satisfies f(1) = 0.
struct FGenerator {
  enum class Kind { kTotalVariation, kKL, kChiSquared, kHellingerSquared, kEgamma };

  Kind kind = Kind::kTotalVariation;
  double gamma = 0.0;  // only meaningful for kEgamma

  static FGenerator TotalVariation() { return {Kind::kTotalVariation, 0.0}; }
  static FGenerator KL() { return {Kind::kKL, 0.0}; }
  static FGenerator ChiSquared() { return {Kind::kChiSquared, 0.0}; }
  static FGenerator HellingerSquared() { return {Kind::kHellingerSquared, 0.0}; }
  static FGenerator Egamma(double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("E_gamma requires gamma >= 0");
    return {Kind::kEgamma, gamma};
  }

  std::string name() const {
    switch (kind) {
      case Kind::kTotalVariation: return "tv";
      case Kind::kKL: return "kl";
      case Kind::kChiSquared: return "chi2";
      case Kind::kHellingerSquared: return "hellinger2";
      case Kind::kEgamma: return "egamma(" + std::to_string(gamma) + ")";
    }
    return "unknown";
  }

  // f(t) for t > 0.
  double operator()(double t) const {
    switch (kind) {
      case Kind::kTotalVariation: return 0.5 * std::abs(t - 1.0);
      case Kind::kKL: return t * std::log(t);
      case Kind::kChiSquared: return t * t - 1.0;
      case Kind::kHellingerSquared: {
        const double r = std::sqrt(t) - 1.0;
        return r * r;
      }
      case Kind::kEgamma:
        return std::max(t - gamma, 0.0) - std::max(1.0 - gamma, 0.0);
    }
    return 0.0;
  }
};

// ---------------------------------------------------------------------------
// Divergences over raw probability vectors. These accept any Eigen vector
// expression and only check that the sizes agree; the Distribution overloads
// further below are the validated entry points.
// ---------------------------------------------------------------------------

template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar TotalVariation(const Eigen::MatrixBase<DerivedP>& p,
                                         const Eigen::MatrixBase<DerivedQ>& q) {
  internal::CheckSameSize(p, q);
  return typename DerivedP::Scalar(0.5) * (p - q).cwiseAbs().sum();
}

// E_gamma via the supremum over events: sum_i (p_i - gamma q_i)_+ - (1-gamma)_+.
// The maximizing event is {i : p_i > gamma q_i}. Symbols with q_i = 0
// contribute p_i even when gamma is infinite.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar Egamma(const Eigen::MatrixBase<DerivedP>& p,
                                 const Eigen::MatrixBase<DerivedQ>& q,
                                 typename DerivedP::Scalar gamma) {
  using Scalar = typename DerivedP::Scalar;
  internal::CheckSameSize(p, q);
  if (!(gamma >= Scalar(0))) throw DomainError("E_gamma requires gamma >= 0");
  Scalar sum(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (q(i) == Scalar(0)) {
      sum += p(i);
    } else {
      sum += std::max(p(i) - gamma * q(i), Scalar(0));
    }
  }
  return std::max(sum - std::max(Scalar(1) - gamma, Scalar(0)), Scalar(0));
}

// E_gamma in its integral form: (1/2) sum_i |p_i - gamma q_i| - (1/2)|1 - gamma|.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar EgammaIntegralForm(
    const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q,
    typename DerivedP::Scalar gamma) {
  using Scalar = typename DerivedP::Scalar;
  internal::CheckSameSize(p, q);
  if (!(gamma >= Scalar(0))) throw DomainError("E_gamma requires gamma >= 0");
  return Scalar(0.5) * (p - gamma * q).cwiseAbs().sum() -
         Scalar(0.5) * std::abs(Scalar(1) - gamma);
}

// E_gamma in its likelihood-ratio form:
// P(log dP/dQ > log gamma) - gamma Q(log dP/dQ > log gamma) - (1-gamma)_+.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar EgammaThresholdForm(
    const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q,
    typename DerivedP::Scalar gamma) {
  using Scalar = typename DerivedP::Scalar;
  using std::log;
  internal::CheckSameSize(p, q);
  if (!(gamma >= Scalar(0))) throw DomainError("E_gamma requires gamma >= 0");
  const Scalar log_gamma = log(gamma);  // -inf at gamma = 0
  Scalar p_event(0);
  Scalar q_event(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) <= Scalar(0)) continue;  // log-likelihood ratio is -inf or undefined
    const bool in_event =
        q(i) <= Scalar(0) || log(p(i)) - log(q(i)) > log_gamma;
    if (in_event) {
      p_event += p(i);
      q_event += q(i);
    }
  }
  return p_event - gamma * q_event - std::max(Scalar(1) - gamma, Scalar(0));
}

// KL divergence in nats; +infinity when p is not absolutely continuous w.r.t. q.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar KLDivergence(const Eigen::MatrixBase<DerivedP>& p,
                                       const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  internal::CheckSameSize(p, q);
  // Summed as q_i g(r_i), r_i = p_i/q_i - 1, g(r) = (1+r) log1p(r) - r. The
  // -r terms add up to zero for normalized inputs, and every term is
  // nonnegative, so nearly coincident pairs keep their relative accuracy.
  Scalar sum(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) <= Scalar(0)) {
      sum += std::max(q(i), Scalar(0));
      continue;
    }
    if (q(i) <= Scalar(0)) return std::numeric_limits<Scalar>::infinity();
    sum += q(i) * internal::KlTerm((p(i) - q(i)) / q(i));
  }
  return sum;
}

// Chi-squared divergence sum_i (p_i - q_i)^2 / q_i; +infinity off-support.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar ChiSquaredDivergence(
    const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  internal::CheckSameSize(p, q);
  Scalar sum(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (q(i) <= Scalar(0)) {
      if (p(i) > Scalar(0)) return std::numeric_limits<Scalar>::infinity();
      continue;
    }
    const Scalar d = p(i) - q(i);
    sum += d * d / q(i);
  }
  return sum;
}

// Squared Hellinger distance sum_i (sqrt p_i - sqrt q_i)^2, in [0, 2].
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar HellingerSquared(const Eigen::MatrixBase<DerivedP>& p,
                                           const Eigen::MatrixBase<DerivedQ>& q) {
  internal::CheckSameSize(p, q);
  return (p.cwiseSqrt() - q.cwiseSqrt()).squaredNorm();
}

template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar FDivergence(const Eigen::MatrixBase<DerivedP>& p,
                                      const Eigen::MatrixBase<DerivedQ>& q,
                                      const FGenerator& f) {
  using Scalar = typename DerivedP::Scalar;
  switch (f.kind) {
    case FGenerator::Kind::kTotalVariation: return TotalVariation(p, q);
    case FGenerator::Kind::kKL: return KLDivergence(p, q);
    case FGenerator::Kind::kChiSquared: return ChiSquaredDivergence(p, q);
    case FGenerator::Kind::kHellingerSquared: return HellingerSquared(p, q);
    case FGenerator::Kind::kEgamma: return Egamma(p, q, Scalar(f.gamma));
  }
  return Scalar(0);
}

// ---------------------------------------------------------------------------
// Distribution overloads.
// ---------------------------------------------------------------------------

template <typename Scalar>
Scalar TotalVariation(const BasicDistribution<Scalar>& p,
                      const BasicDistribution<Scalar>& q) {
  return TotalVariation(p.probs(), q.probs());
}

template <typename Scalar>
Scalar Egamma(const BasicDistribution<Scalar>& p,
              const BasicDistribution<Scalar>& q,
              std::type_identity_t<Scalar> gamma) {
  return Egamma(p.probs(), q.probs(), gamma);
}

template <typename Scalar>
Scalar KLDivergence(const BasicDistribution<Scalar>& p,
                    const BasicDistribution<Scalar>& q) {
  return KLDivergence(p.probs(), q.probs());
}

template <typename Scalar>
Scalar HellingerSquared(const BasicDistribution<Scalar>& p,
                        const BasicDistribution<Scalar>& q) {
  return HellingerSquared(p.probs(), q.probs());
}

template <typename Scalar>
Scalar FDivergence(const BasicDistribution<Scalar>& p,
                   const BasicDistribution<Scalar>& q, const FGenerator& f) {
  return FDivergence(p.probs(), q.probs(), f);
}

}  // namespace ldpkit

#endif  // LDPKIT_DIST_H_
