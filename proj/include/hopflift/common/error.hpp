// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflift {

enum class ErrorCode {
  InvalidArgument,
  InvalidResolution,
  GridMismatch,
  WidthTooSmall,
  WidthTooLarge,
  RadiusOutOfRange,
  NotUnit,
  NotTangent,
  TooCloseToPole,
  BadLatitude,
  ChartExhausted,
  NotClosed,
  ProjectionDegenerate,
  SolverDiverged,
  NotConverged,
  IoError,
  FormatError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopflift
