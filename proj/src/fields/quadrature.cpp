// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/fields/quadrature.hpp"

#include <cmath>

namespace hopflift {

double l2_inner(const Grid3& grid, std::span<const double> a, std::span<const double> b,
                int ncomp, const Region& region) {
  if (a.size() != grid.size() * ncomp || b.size() != a.size()) {
    throw Error(ErrorCode::GridMismatch, "value count does not match grid");
  }
  double sum = 0.0;
  for (std::size_t node = 0; node < grid.size(); ++node) {
    if (!region.contains(grid, node)) continue;
    double dot = 0.0;
    for (int c = 0; c < ncomp; ++c) dot += a[node * ncomp + c] * b[node * ncomp + c];
    sum += grid.weight(node) * dot;
  }
  return sum;
}

double lp_norm(const Grid3& grid, std::span<const double> values, int ncomp, double p,
               const Region& region) {
  if (values.size() != grid.size() * ncomp) {
    throw Error(ErrorCode::GridMismatch, "value count does not match grid");
  }
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lp_norm needs p >= 1");
  double sum = 0.0;
  for (std::size_t node = 0; node < grid.size(); ++node) {
    if (!region.contains(grid, node)) continue;
    double sq = 0.0;
    for (int c = 0; c < ncomp; ++c) sq += values[node * ncomp + c] * values[node * ncomp + c];
    const double mag = std::sqrt(sq);
    sum += grid.weight(node) * (p == 2.0 ? sq : (p == 1.0 ? mag : std::pow(mag, p)));
  }
  return p == 2.0 ? std::sqrt(sum) : (p == 1.0 ? sum : std::pow(sum, 1.0 / p));
}

double region_volume(const Grid3& grid, const Region& region) {
  double sum = 0.0;
  for (std::size_t node = 0; node < grid.size(); ++node) {
    if (region.contains(grid, node)) sum += grid.weight(node);
  }
  return sum;
}

}  // namespace hopflift
