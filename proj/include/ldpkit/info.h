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

#ifndef LDPKIT_INFO_H_
#define LDPKIT_INFO_H_

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Dense>

#include "ldpkit/dist.h"
#include "ldpkit/errors.h"
#include "ldpkit/kernel.h"

namespace ldpkit {

// A joint probability matrix over A x B (rows index A, columns index B).
template <typename Scalar = double>
class BasicJointDistribution {
 public:
  using MatrixType = Matrix<Scalar>;

  explicit BasicJointDistribution(MatrixType probs) : probs_(std::move(probs)) {
    if (probs_.rows() < 1 || probs_.cols() < 1) {
      throw DomainError("joint distribution needs nonempty alphabets");
    }
    Eigen::Map<Vector<Scalar>> flat(probs_.data(), probs_.size());
    const std::string error = internal::NormalizeInPlace(flat);
    if (!error.empty()) throw DomainError("invalid joint distribution: " + error);
  }

  // P_A x K: A ~ p, B | A ~ K(.|A).
  static BasicJointDistribution FromChannel(const BasicDistribution<Scalar>& p,
                                            const BasicKernel<Scalar>& k) {
    if (p.size() != k.input_size()) {
      throw DimensionError("input distribution does not match kernel inputs");
    }
    return BasicJointDistribution(p.probs().asDiagonal() * k.rows());
  }

  const MatrixType& probs() const { return probs_; }
  Index size_a() const { return probs_.rows(); }
  Index size_b() const { return probs_.cols(); }

  Vector<Scalar> MarginalA() const { return probs_.rowwise().sum(); }
  Vector<Scalar> MarginalB() const { return probs_.colwise().sum().transpose(); }
  MatrixType ProductOfMarginals() const {
    return MarginalA() * MarginalB().transpose();
  }

 private:
  MatrixType probs_;
};

using JointDistribution = BasicJointDistribution<double>;

// Shannon entropy in nats, 0 log 0 = 0.
template <typename Scalar>
Scalar Entropy(const BasicDistribution<Scalar>& p) {
  Scalar h(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] > Scalar(0)) h -= p[i] * std::log(p[i]);
  }
  return h;
}

// I(A; B) = D_KL(P_AB || P_A P_B) in nats.
template <typename Scalar>
Scalar MutualInformation(const BasicJointDistribution<Scalar>& joint) {
  const Vector<Scalar> a = joint.MarginalA();
  const Vector<Scalar> b = joint.MarginalB();
  Scalar sum(0);
  for (Index i = 0; i < joint.size_a(); ++i) {
    for (Index j = 0; j < joint.size_b(); ++j) {
      const Scalar pij = joint.probs()(i, j);
      if (pij > Scalar(0)) sum += pij * std::log(pij / (a(i) * b(j)));
    }
  }
  return std::max(sum, Scalar(0));
}

// I_gamma(A; B) = E_gamma(P_AB || P_A P_B).
template <typename Scalar>
Scalar EgammaInformation(const BasicJointDistribution<Scalar>& joint,
                         std::type_identity_t<Scalar> gamma) {
  const Matrix<Scalar> product = joint.ProductOfMarginals();
  return Egamma(joint.probs().reshaped(), product.reshaped(), gamma);
}

// Pushes the B coordinate of `joint` through `k`: P_{AB'} = P_AB K.
template <typename Scalar>
BasicJointDistribution<Scalar> ApplyToSecond(
    const BasicJointDistribution<Scalar>& joint, const BasicKernel<Scalar>& k) {
  if (joint.size_b() != k.input_size()) {
    throw DimensionError("kernel inputs do not match the joint's B alphabet");
  }
  return BasicJointDistribution<Scalar>(joint.probs() * k.rows());
}

// Composite Simpson rule with an even number of panels.
template <typename F>
double CompositeSimpson(F&& f, double a, double b, int panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw DomainError("Simpson rule needs an even panel count >= 2");
  }
  const double h = (b - a) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    const double x = a + h * i;
    if (i % 2 == 1) {
      odd += f(x);
    } else {
      even += f(x);
    }
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

// Theta ~ Uniform[0,1], X_1..X_n | Theta = theta i.i.d. Bernoulli(theta).
// Every quantity depends on x^n only through s = number of ones, so sums run
// over s = 0..n with multiplicity C(n, s).
struct BernoulliUniformModel {
  int n = 1;
  int panels = 20000;  // composite Simpson panels per s-term

  void Validate() const;
};

// P_{X^n}(x^n) = s! (n-s)! / (n+1)! for a sequence with s ones.
double BuMarginal(int n, int s);

// I_gamma(Theta; X^n) =
//   (1/(n+1)) sum_s int_0^1 [theta^s (1-theta)^{n-s} (n+1)!/(s!(n-s)!) - gamma]_+
//   - (1 - gamma)_+.
// The integrand has kinks where the likelihood ratio crosses gamma; they are
// not localized, so accuracy is set by `panels` alone.
double BuIgamma(const BernoulliUniformModel& model, double gamma);

// Closed form of I_gamma(Theta; X) for n = 1:
// gamma^2/4 on [0,1], (gamma-2)^2/4 on [1,2], 0 beyond.
double BuIgammaClosedN1(double gamma);

// I(Theta; X^n) = int_0^1 D_KL(P_{X^n|theta} || P_{X^n}) dtheta, in nats.
double BuMutualInformation(const BernoulliUniformModel& model);

}  // namespace ldpkit

#endif  // LDPKIT_INFO_H_
