// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "hopflift/fields/field.hpp"

namespace hopflift {

// H3F1 layout: one ASCII line "H3F1 <n> <ncomp> <tag>\n" followed by n^3*ncomp
// little-endian doubles in node order with the component innermost.
enum class MapTag { S2, S3, Scalar, Vec1, Vec2 };

std::string_view to_string(MapTag tag);
MapTag parse_map_tag(std::string_view text);
int component_count(MapTag tag);

struct RawField {
  int n = 0;
  MapTag tag = MapTag::Scalar;
  std::vector<double> values;
};

void write_h3f(const std::filesystem::path& path, const RawField& field);
RawField read_h3f(const std::filesystem::path& path);

void write_h3f(const std::filesystem::path& path, const ScalarField& f);
void write_h3f(const std::filesystem::path& path, const VecField& f);
void write_h3f(const std::filesystem::path& path, const SphereMapField& f);
void write_h3f(const std::filesystem::path& path, const LiftField& f);

// Typed readers check the tag; the ball margin is not stored in the file.
ScalarField read_scalar_field(const std::filesystem::path& path, double ball_margin = 0.0);
VecField read_vec_field(const std::filesystem::path& path, double ball_margin = 0.0);
SphereMapField read_sphere_map(const std::filesystem::path& path, double ball_margin = 0.0);
LiftField read_lift_field(const std::filesystem::path& path, double ball_margin = 0.0);

}  // namespace hopflift
