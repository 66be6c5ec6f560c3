// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hopflift {

using Json = nlohmann::ordered_json;

// Bumped whenever a report layout changes.
inline constexpr int kReportSchemaVersion = 1;

// Diagnostics record: named scalar metrics plus tolerance checks.
// Entries keep insertion order so serialized output is stable.
class Report {
 public:
  struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
  };

  explicit Report(std::string kind = "report") : kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

  // Inserts or overwrites a metric.
  void set(std::string_view key, double value);
  // Throws InvalidArgument when the metric is missing.
  double metric(std::string_view key) const;
  bool has(std::string_view key) const;

  // Records `value <= tolerance` (NaN fails).
  bool check(std::string_view name, double value, double tolerance);

  const std::vector<std::pair<std::string, double>>& metrics() const { return metrics_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;

  Json to_json() const;

 private:
  std::string kind_;
  std::vector<std::pair<std::string, double>> metrics_;
  std::vector<Check> checks_;
};

}  // namespace hopflift
