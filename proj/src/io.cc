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

#include "ldpkit/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ldpkit/errors.h"

namespace ldpkit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double ParseNumber(std::string_view token, const std::string& where) {
  token = Trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(where + ": '" + std::string(token) + "' is not a number");
  }
  return value;
}

std::vector<double> ParseCsvLine(std::string_view line, const std::string& where) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    values.push_back(ParseNumber(line.substr(start, comma - start), where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::vector<double> JsonNumbers(const nlohmann::json& array, const std::string& where) {
  if (!array.is_array()) throw ParseError(where + ": expected an array");
  std::vector<double> values;
  for (const auto& item : array) {
    if (!item.is_number()) throw ParseError(where + ": expected only numbers");
    values.push_back(item.get<double>());
  }
  return values;
}

nlohmann::json VectorJson(const Vector<double>& v) {
  nlohmann::json array = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) array.push_back(JsonNumber(v(i)));
  return array;
}

Vector<double> ToVector(const std::vector<double>& values) {
  return Eigen::Map<const Vector<double>>(values.data(), static_cast<Index>(values.size()));
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, ptr);
}

nlohmann::json JsonNumber(double value) {
  if (std::isfinite(value)) return value;
  return FormatNumber(value);
}

Distribution ParseDistribution(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw ParseError("empty distribution");
  std::vector<double> values;
  if (text.front() == '[') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("distribution JSON: ") + e.what());
    }
    values = JsonNumbers(parsed, "distribution");
  } else {
    if (text.find('\n') != std::string_view::npos) {
      throw ParseError("distribution CSV must be a single line");
    }
    values = ParseCsvLine(text, "distribution");
  }
  return Distribution(ToVector(values));
}

std::string SerializeDistribution(const Distribution& p) {
  std::string out = "[";
  for (Index i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatNumber(p[i]);
  }
  return out + "]";
}

Kernel ParseKernel(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw ParseError("empty kernel");
  std::vector<std::vector<double>> rows;
  if (text.front() == '{') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("kernel JSON: ") + e.what());
    }
    if (!parsed.contains("rows")) throw ParseError("kernel JSON needs a \"rows\" field");
    const auto& json_rows = parsed.at("rows");
    if (!json_rows.is_array()) throw ParseError("kernel \"rows\" must be an array");
    for (std::size_t i = 0; i < json_rows.size(); ++i) {
      rows.push_back(JsonNumbers(json_rows[i], "kernel row " + std::to_string(i)));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto newline = text.find('\n', start);
      const std::string_view line =
          Trim(text.substr(start, newline == std::string_view::npos ? newline : newline - start));
      if (!line.empty()) {
        rows.push_back(ParseCsvLine(line, "kernel row " + std::to_string(rows.size())));
      }
      if (newline == std::string_view::npos) break;
      start = newline + 1;
    }
  }
  if (rows.empty()) throw ParseError("kernel has no rows");
  const std::size_t width = rows.front().size();
  Matrix<double> matrix(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw ParseError("kernel row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      matrix(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  return Kernel(std::move(matrix));
}

Kernel LoadKernelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open kernel file '" + path + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  return ParseKernel(contents.str());
}

std::string SerializeKernelCsv(const Kernel& k) {
  std::string out;
  for (Index x = 0; x < k.input_size(); ++x) {
    for (Index z = 0; z < k.output_size(); ++z) {
      if (z > 0) out += ',';
      out += FormatNumber(k.rows()(x, z));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json ToJson(const ContractionReport& report) {
  nlohmann::json upper = nlohmann::json::object();
  for (const auto& [name, value] : report.upper_bounds) upper[name] = JsonNumber(value);
  return {
      {"eta_gamma", JsonNumber(report.eta_gamma)},
      {"gamma", JsonNumber(report.gamma)},
      {"eta_tv", JsonNumber(report.eta_tv)},
      {"argmax_pair", {report.argmax_pair.first, report.argmax_pair.second}},
      {"upper_bounds", upper},
  };
}

nlohmann::json ToJson(const BoundReport& report) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [name, value] : report.witness) witness[name] = JsonNumber(value);
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [name, value] : report.inputs) inputs[name] = JsonNumber(value);
  return {
      {"bound_name", report.bound_name},
      {"value", JsonNumber(report.value)},
      {"witness", witness},
      {"inputs", inputs},
      {"flags", report.flags},
  };
}

nlohmann::json ToJson(const EquivalenceReport& report) {
  nlohmann::json out = {
      {"certified", report.certified},
      {"delta_tight", JsonNumber(report.delta_tight)},
      {"pairs_checked", report.pairs_checked},
      {"max_ratio", JsonNumber(report.max_ratio)},
      {"ratio_witness", {{"p", VectorJson(report.ratio_witness_p)},
                         {"q", VectorJson(report.ratio_witness_q)}}},
      {"violation_found", report.violation_found},
      {"consistent", report.consistent},
  };
  if (report.violation_found) {
    out["violation"] = {{"p", VectorJson(report.violation_p)},
                        {"q", VectorJson(report.violation_q)},
                        {"excess", JsonNumber(report.worst_excess)}};
  }
  return out;
}

nlohmann::json ToJson(const BruteEtaEstimate& estimate) {
  return {
      {"value", JsonNumber(estimate.value)},
      {"witness", {{"p", VectorJson(estimate.witness_p)}, {"q", VectorJson(estimate.witness_q)}}},
      {"pairs_evaluated", estimate.pairs_evaluated},
      {"pairs_skipped", estimate.pairs_skipped},
  };
}

nlohmann::json ToJson(const SetSupremum& supremum) {
  nlohmann::json event = nlohmann::json::array();
  for (int z = 0; z < 64; ++z) {
    if (supremum.event_mask & (std::uint64_t{1} << z)) event.push_back(z);
  }
  return {
      {"value", JsonNumber(supremum.value)},
      {"x", supremum.x},
      {"x_prime", supremum.x_prime},
      {"event", event},
  };
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::AddRow(const std::vector<double>& values) {
  if (values.size() != columns_) {
    throw DimensionError("CSV row has " + std::to_string(values.size()) +
                         " values, header has " + std::to_string(columns_));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += FormatNumber(values[i]);
  }
  text_ += '\n';
}

std::string CsvWriter::str() const { return text_; }

std::string ProfileToCsv(const PrivacyProfile& profile) {
  CsvWriter csv({"epsilon", "delta"});
  for (const auto& [eps, delta] : profile.points) csv.AddRow({eps, delta});
  return csv.str();
}

nlohmann::json RunManifest::ToJson() const {
  return {
      {"command", command},
      {"args", args},
      {"seed", seed},
      {"tool_version", tool_version},
      {"outputs", outputs},
  };
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace ldpkit
