// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/common/error.hpp"

namespace hopflift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::WidthTooSmall: return "WidthTooSmall";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::TooCloseToPole: return "TooCloseToPole";
    case ErrorCode::BadLatitude: return "BadLatitude";
    case ErrorCode::ChartExhausted: return "ChartExhausted";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ProjectionDegenerate: return "ProjectionDegenerate";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace hopflift
