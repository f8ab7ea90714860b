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

#ifndef LDPKIT_KERNEL_H_
#define LDPKIT_KERNEL_H_

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "ldpkit/dist.h"
#include "ldpkit/errors.h"

namespace ldpkit {

// Largest product alphabet TensorPower/ProductDistribution will materialize.
inline constexpr Index kDefaultProductCap = 4096;

// A Markov kernel (channel) K: X -> P(Z), stored as a dense row-stochastic
// |X| x |Z| matrix whose row x is K(.|x).
template <typename Scalar = double>
class BasicKernel {
 public:
  using MatrixType = Matrix<Scalar>;

  // Throws DomainError naming the first row that is not a distribution.
  explicit BasicKernel(MatrixType rows) : rows_(std::move(rows)) {
    if (rows_.rows() < 1 || rows_.cols() < 1) {
      throw DomainError("kernel must have at least one input and one output");
    }
    for (Index x = 0; x < rows_.rows(); ++x) {
      auto row = rows_.row(x);
      const std::string error = internal::NormalizeInPlace(row);
      if (!error.empty()) {
        throw DomainError("kernel row " + std::to_string(x) + ": " + error);
      }
    }
  }

  static BasicKernel Identity(Index size) {
    if (size < 1) throw DomainError("identity kernel needs size >= 1");
    return BasicKernel(MatrixType::Identity(size, size));
  }

  const MatrixType& rows() const { return rows_; }
  Index input_size() const { return rows_.rows(); }
  Index output_size() const { return rows_.cols(); }

  // K(.|x) as a column-vector expression.
  auto row(Index x) const { return rows_.row(x).transpose(); }

 private:
  MatrixType rows_;
};

using Kernel = BasicKernel<double>;

namespace internal {

inline Index CheckedPower(Index base, int n, Index cap, const char* what) {
  Index size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > cap / base) {
      throw CapacityError(std::string(what) + " of size " +
                          std::to_string(base) + "^" + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap));
    }
    size *= base;
  }
  return size;
}

}  // namespace internal

// PK = sum_x P(x) K(.|x).
template <typename Scalar>
BasicDistribution<Scalar> Pushforward(const BasicDistribution<Scalar>& p,
                                      const BasicKernel<Scalar>& k) {
  if (p.size() != k.input_size()) {
    throw DimensionError("distribution over " + std::to_string(p.size()) +
                         " symbols cannot feed a kernel with " +
                         std::to_string(k.input_size()) + " inputs");
  }
  return BasicDistribution<Scalar>(k.rows().transpose() * p.probs());
}

// Binary symmetric channel with crossover probability omega.
template <typename Scalar = double>
BasicKernel<Scalar> Bsc(Scalar omega) {
  if (!(omega >= Scalar(0) && omega <= Scalar(1))) {
    throw DomainError("BSC crossover must lie in [0,1]");
  }
  Matrix<Scalar> rows(2, 2);
  rows << Scalar(1) - omega, omega, omega, Scalar(1) - omega;
  return BasicKernel<Scalar>(std::move(rows));
}

// Randomized response: BSC(1 / (1 + e^epsilon)).
template <typename Scalar = double>
BasicKernel<Scalar> RandomizedResponse(Scalar epsilon) {
  if (!(epsilon >= Scalar(0))) {
    throw DomainError("randomized response requires epsilon >= 0");
  }
  return Bsc<Scalar>(Scalar(1) / (Scalar(1) + std::exp(epsilon)));
}

// k-ary randomized response: keep the input with probability
// e^eps / (k - 1 + e^eps), otherwise report each other symbol with
// probability 1 / (k - 1 + e^eps).
template <typename Scalar = double>
BasicKernel<Scalar> KaryRandomizedResponse(Scalar epsilon, int k) {
  if (k < 2) throw DomainError("k-ary randomized response requires k >= 2");
  if (!(epsilon >= Scalar(0))) {
    throw DomainError("k-ary randomized response requires epsilon >= 0");
  }
  const Scalar e = std::exp(epsilon);
  const Scalar denom = Scalar(k - 1) + e;
  Matrix<Scalar> rows = Matrix<Scalar>::Constant(k, k, Scalar(1) / denom);
  rows.diagonal().setConstant(e / denom);
  return BasicKernel<Scalar>(std::move(rows));
}

// K^{(x)n}: entry ((x_1..x_n), (z_1..z_n)) = prod_i K(z_i | x_i). Product
// alphabets are flattened row-major with coordinate 1 most significant, which
// is exactly the iterated Kronecker product K (x) K (x) ... (x) K.
template <typename Scalar>
BasicKernel<Scalar> TensorPower(const BasicKernel<Scalar>& k, int n,
                                Index cap = kDefaultProductCap) {
  if (n < 1) throw DomainError("tensor power requires n >= 1");
  internal::CheckedPower(k.input_size(), n, cap, "tensor power input alphabet");
  internal::CheckedPower(k.output_size(), n, cap, "tensor power output alphabet");
  Matrix<Scalar> acc = k.rows();
  for (int i = 1; i < n; ++i) {
    Matrix<Scalar> next(acc.rows() * k.input_size(), acc.cols() * k.output_size());
    for (Index r = 0; r < acc.rows(); ++r) {
      for (Index c = 0; c < acc.cols(); ++c) {
        next.block(r * k.input_size(), c * k.output_size(), k.input_size(),
                   k.output_size()) = acc(r, c) * k.rows();
      }
    }
    acc = std::move(next);
  }
  return BasicKernel<Scalar>(std::move(acc));
}

// P^{(x)n} over the n-fold product alphabet, same flattening as TensorPower.
template <typename Scalar>
BasicDistribution<Scalar> ProductDistribution(const BasicDistribution<Scalar>& p,
                                              int n,
                                              Index cap = kDefaultProductCap) {
  if (n < 1) throw DomainError("product distribution requires n >= 1");
  internal::CheckedPower(p.size(), n, cap, "product alphabet");
  Vector<Scalar> acc = p.probs();
  for (int i = 1; i < n; ++i) {
    Vector<Scalar> next(acc.size() * p.size());
    for (Index r = 0; r < acc.size(); ++r) {
      next.segment(r * p.size(), p.size()) = acc(r) * p.probs();
    }
    acc = std::move(next);
  }
  return BasicDistribution<Scalar>(std::move(acc));
}

}  // namespace ldpkit

#endif  // LDPKIT_KERNEL_H_
