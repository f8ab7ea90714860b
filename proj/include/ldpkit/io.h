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

#ifndef LDPKIT_IO_H_
#define LDPKIT_IO_H_

// Text formats: distributions and kernels in, JSON reports and CSV curves out.
//
// CSV dialect: comma separated, '.' decimal point, LF line endings, a header
// row, every number printed with 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ldpkit/bounds.h"
#include "ldpkit/contraction.h"
#include "ldpkit/dist.h"
#include "ldpkit/kernel.h"
#include "ldpkit/ldp.h"
#include "ldpkit/oracle.h"

namespace ldpkit {

// 17 significant digits, shortest exponent form; "inf", "-inf", "nan".
std::string FormatNumber(double value);

// A JSON array "[0.25, 0.75]" or a single CSV line "0.25,0.75".
Distribution ParseDistribution(std::string_view text);
std::string SerializeDistribution(const Distribution& p);

// JSON {"rows": [[...], ...]} or CSV with one kernel row per line. Errors name
// the first offending row.
Kernel ParseKernel(std::string_view text);
Kernel LoadKernelFile(const std::string& path);
std::string SerializeKernelCsv(const Kernel& k);

nlohmann::json ToJson(const ContractionReport& report);
nlohmann::json ToJson(const BoundReport& report);
nlohmann::json ToJson(const EquivalenceReport& report);
nlohmann::json ToJson(const BruteEtaEstimate& estimate);
nlohmann::json ToJson(const SetSupremum& supremum);
// JSON has no infinities; non-finite values become the strings of FormatNumber.
nlohmann::json JsonNumber(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void AddRow(const std::vector<double>& values);
  std::string str() const;

 private:
  std::size_t columns_;
  std::string text_;
};

std::string ProfileToCsv(const PrivacyProfile& profile);

// Records what a command wrote so it can be rerun.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> args;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::vector<std::string> outputs;

  nlohmann::json ToJson() const;
};

// Writes `contents` to `path` byte for byte; throws std::runtime_error.
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace ldpkit

#endif  // LDPKIT_IO_H_
