// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <charconv>
#include <fstream>
#include <string>

#include "hopflift/cli/cli.hpp"

namespace hopflift::cli {
namespace {

template <int NComp, class Tag>
void write_vtk(const NodeField<NComp, Tag>& f, const std::filesystem::path& path,
               const std::array<const char*, NComp>& names) {
  if (path.empty()) throw Error(ErrorCode::IoError, "empty VTK output path");
  if (!f.all_finite()) throw Error(ErrorCode::InvalidArgument, "field has non-finite values");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  const Grid3& g = f.grid();
  const int n = g.n();
  out << "# vtk DataFile Version 3.0\nhopflift field\nASCII\nDATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << n << ' ' << n << ' ' << n << '\n';
  out << "ORIGIN -1 -1 -1\n";
  char buf[32];
  auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
  };
  out << "SPACING ";
  for (int d = 0; d < 3; ++d) {
    put(g.h());
    out << (d < 2 ? ' ' : '\n');
  }
  out << "POINT_DATA " << g.size() << '\n';
  for (int c = 0; c < NComp; ++c) {
    out << "SCALARS " << names[c] << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t node = 0; node < g.size(); ++node) {
      put(f(node, c));
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

void export_vtk(const ScalarField& f, const std::filesystem::path& path) {
  write_vtk(f, path, {"s"});
}

void export_vtk(const VecField& f, const std::filesystem::path& path) {
  write_vtk<3, VectorTag>(f, path, {"v1", "v2", "v3"});
}

void export_vtk(const SphereMapField& f, const std::filesystem::path& path) {
  write_vtk(f, path, {"u1", "u2", "u3"});
}

void export_vtk(const LiftField& f, const std::filesystem::path& path) {
  write_vtk(f, path, {"x1", "x2", "x3", "x4"});
}

}  // namespace hopflift::cli
