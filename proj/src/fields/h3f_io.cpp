// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/fields/h3f_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace hopflift {

namespace {

std::uint64_t byteswap64(std::uint64_t v) {
  std::uint64_t out = 0;
  for (int b = 0; b < 8; ++b) out |= ((v >> (8 * b)) & 0xffu) << (8 * (7 - b));
  return out;
}

void encode_le(const std::vector<double>& values, std::vector<char>& bytes) {
  bytes.resize(values.size() * 8);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto bits = std::bit_cast<std::uint64_t>(values[i]);
    if constexpr (std::endian::native == std::endian::big) bits = byteswap64(bits);
    std::memcpy(bytes.data() + 8 * i, &bits, 8);
  }
}

void decode_le(const std::vector<char>& bytes, std::vector<double>& values) {
  values.resize(bytes.size() / 8);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, bytes.data() + 8 * i, 8);
    if constexpr (std::endian::native == std::endian::big) bits = byteswap64(bits);
    values[i] = std::bit_cast<double>(bits);
  }
}

RawField expect_tag(RawField raw, MapTag tag, const std::filesystem::path& path) {
  if (raw.tag != tag) {
    throw Error(ErrorCode::FormatError, path.string() + ": expected tag " +
                                            std::string(to_string(tag)) + ", found " +
                                            std::string(to_string(raw.tag)));
  }
  return raw;
}

}  // namespace

std::string_view to_string(MapTag tag) {
  switch (tag) {
    case MapTag::S2: return "S2";
    case MapTag::S3: return "S3";
    case MapTag::Scalar: return "SCAL";
    case MapTag::Vec1: return "VEC1";
    case MapTag::Vec2: return "VEC2";
  }
  return "?";
}

MapTag parse_map_tag(std::string_view text) {
  if (text == "S2") return MapTag::S2;
  if (text == "S3") return MapTag::S3;
  if (text == "SCAL") return MapTag::Scalar;
  if (text == "VEC1") return MapTag::Vec1;
  if (text == "VEC2") return MapTag::Vec2;
  throw Error(ErrorCode::FormatError, "unknown map tag '" + std::string(text) + "'");
}

int component_count(MapTag tag) {
  switch (tag) {
    case MapTag::S2: return 3;
    case MapTag::S3: return 4;
    case MapTag::Scalar: return 1;
    case MapTag::Vec1: return 3;
    case MapTag::Vec2: return 3;
  }
  return 0;
}

void write_h3f(const std::filesystem::path& path, const RawField& field) {
  const int ncomp = component_count(field.tag);
  const std::size_t expected = static_cast<std::size_t>(field.n) * field.n * field.n * ncomp;
  if (field.values.size() != expected) {
    throw Error(ErrorCode::GridMismatch, "value count does not match header");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << "H3F1 " << field.n << ' ' << ncomp << ' ' << to_string(field.tag) << '\n';
  std::vector<char> bytes;
  encode_le(field.values, bytes);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

RawField read_h3f(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(ErrorCode::FormatError, path.string() + ": missing header");
  }
  std::istringstream fields(header);
  std::string magic, tag_text;
  long long n = 0, ncomp = 0;
  if (!(fields >> magic >> n >> ncomp >> tag_text) || magic != "H3F1") {
    throw Error(ErrorCode::FormatError, path.string() + ": malformed H3F1 header");
  }
  std::string extra;
  if (fields >> extra) {
    throw Error(ErrorCode::FormatError, path.string() + ": trailing header tokens");
  }
  RawField raw;
  raw.tag = parse_map_tag(tag_text);
  if (n < 3 || n > 4096 || ncomp != component_count(raw.tag)) {
    throw Error(ErrorCode::FormatError, path.string() + ": inconsistent header");
  }
  raw.n = static_cast<int>(n);
  const std::size_t count = static_cast<std::size_t>(n) * n * n * ncomp;
  std::vector<char> bytes(count * 8);
  in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
    throw Error(ErrorCode::FormatError, path.string() + ": truncated payload");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::FormatError, path.string() + ": trailing bytes after payload");
  }
  decode_le(bytes, raw.values);
  return raw;
}

void write_h3f(const std::filesystem::path& path, const ScalarField& f) {
  write_h3f(path, RawField{f.grid().n(), MapTag::Scalar, {f.values().begin(), f.values().end()}});
}

void write_h3f(const std::filesystem::path& path, const VecField& f) {
  const MapTag tag = f.degree() == FormDegree::One ? MapTag::Vec1 : MapTag::Vec2;
  write_h3f(path, RawField{f.grid().n(), tag, {f.values().begin(), f.values().end()}});
}

void write_h3f(const std::filesystem::path& path, const SphereMapField& f) {
  write_h3f(path, RawField{f.grid().n(), MapTag::S2, {f.values().begin(), f.values().end()}});
}

void write_h3f(const std::filesystem::path& path, const LiftField& f) {
  write_h3f(path, RawField{f.grid().n(), MapTag::S3, {f.values().begin(), f.values().end()}});
}

ScalarField read_scalar_field(const std::filesystem::path& path, double ball_margin) {
  RawField raw = expect_tag(read_h3f(path), MapTag::Scalar, path);
  return ScalarField(Grid3(raw.n, ball_margin), std::move(raw.values));
}

VecField read_vec_field(const std::filesystem::path& path, double ball_margin) {
  RawField raw = read_h3f(path);
  if (raw.tag != MapTag::Vec1 && raw.tag != MapTag::Vec2) {
    throw Error(ErrorCode::FormatError,
                path.string() + ": expected VEC1 or VEC2, found " + std::string(to_string(raw.tag)));
  }
  const FormDegree degree = raw.tag == MapTag::Vec1 ? FormDegree::One : FormDegree::Two;
  return VecField(Grid3(raw.n, ball_margin), degree, std::move(raw.values));
}

SphereMapField read_sphere_map(const std::filesystem::path& path, double ball_margin) {
  RawField raw = expect_tag(read_h3f(path), MapTag::S2, path);
  return SphereMapField(Grid3(raw.n, ball_margin), std::move(raw.values));
}

LiftField read_lift_field(const std::filesystem::path& path, double ball_margin) {
  RawField raw = expect_tag(read_h3f(path), MapTag::S3, path);
  return LiftField(Grid3(raw.n, ball_margin), std::move(raw.values));
}

}  // namespace hopflift
