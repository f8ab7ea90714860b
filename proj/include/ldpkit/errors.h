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

#ifndef LDPKIT_ERRORS_H_
#define LDPKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ldpkit {

// Operand shapes disagree (alphabet sizes, kernel input/output sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar argument lies outside the range an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A product alphabet or an exhaustive search would exceed its configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed distribution/kernel input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldpkit

#endif  // LDPKIT_ERRORS_H_
