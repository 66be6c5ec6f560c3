// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "hopflift/common/error.hpp"
#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"

namespace hopflift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitUsage = 64;

int exit_code_for(ErrorCode code);

// Parses argv, runs one subcommand and returns the process exit status.
int run(int argc, const char* const* argv);

// Legacy ASCII VTK, STRUCTURED_POINTS over [-1, 1]^3, one SCALARS array per
// component. Throws IoError for an empty or unwritable path and
// InvalidArgument for non-finite values.
void export_vtk(const ScalarField& f, const std::filesystem::path& path);
void export_vtk(const VecField& f, const std::filesystem::path& path);
void export_vtk(const SphereMapField& f, const std::filesystem::path& path);
void export_vtk(const LiftField& f, const std::filesystem::path& path);

struct SelftestOptions {
  int n = 33;
  bool strict = false;
};

// Invariant suite on analytic maps. The report carries no timings, so two
// runs produce identical JSON.
Report selftest(const SelftestOptions& opt);

}  // namespace hopflift::cli
