// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/common/report.hpp"

#include <algorithm>

#include "hopflift/common/error.hpp"

namespace hopflift {

void Report::set(std::string_view key, double value) {
  auto it = std::find_if(metrics_.begin(), metrics_.end(),
                         [&](const auto& entry) { return entry.first == key; });
  if (it != metrics_.end()) {
    it->second = value;
  } else {
    metrics_.emplace_back(std::string(key), value);
  }
}

double Report::metric(std::string_view key) const {
  auto it = std::find_if(metrics_.begin(), metrics_.end(),
                         [&](const auto& entry) { return entry.first == key; });
  if (it == metrics_.end()) {
    throw Error(ErrorCode::InvalidArgument, "no metric named '" + std::string(key) + "'");
  }
  return it->second;
}

bool Report::has(std::string_view key) const {
  return std::any_of(metrics_.begin(), metrics_.end(),
                     [&](const auto& entry) { return entry.first == key; });
}

bool Report::check(std::string_view name, double value, double tolerance) {
  const bool pass = value <= tolerance;
  checks_.push_back(Check{std::string(name), value, tolerance, pass});
  return pass;
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["kind"] = kind_;
  Json metrics = Json::object();
  for (const auto& [key, value] : metrics_) metrics[key] = value;
  out["metrics"] = std::move(metrics);
  Json checks = Json::array();
  for (const auto& c : checks_) {
    checks.push_back(
        Json{{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  out["checks"] = std::move(checks);
  out["passed"] = passed();
  return out;
}

}  // namespace hopflift
