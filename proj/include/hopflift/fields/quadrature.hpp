// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "hopflift/fields/field.hpp"

namespace hopflift {

// Trapezoidal quadrature over the nodes selected by `region`. Sums run in
// node order, so results are reproducible bit for bit.
double l2_inner(const Grid3& grid, std::span<const double> a, std::span<const double> b,
                int ncomp, const Region& region);
// (sum_w |v|^p)^(1/p) with |v| the pointwise Euclidean magnitude.
double lp_norm(const Grid3& grid, std::span<const double> values, int ncomp, double p,
               const Region& region);
// Quadrature of the constant 1 over the region.
double region_volume(const Grid3& grid, const Region& region);

template <int N, class Tag>
double l2_inner(const NodeField<N, Tag>& a, const NodeField<N, Tag>& b,
                const Region& region = Region::cube()) {
  require_same_grid(a.grid(), b.grid());
  return l2_inner(a.grid(), a.values(), b.values(), N, region);
}

inline double l2_inner(const VecField& a, const VecField& b,
                       const Region& region = Region::cube()) {
  require_same_grid(a.grid(), b.grid());
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::InvalidArgument, "inner product of fields with different degree");
  }
  return l2_inner(a.grid(), a.values(), b.values(), 3, region);
}

template <int N, class Tag>
double lp_norm(const NodeField<N, Tag>& f, double p, const Region& region = Region::cube()) {
  return lp_norm(f.grid(), f.values(), N, p, region);
}
template <int N, class Tag>
double l2_norm(const NodeField<N, Tag>& f, const Region& region = Region::cube()) {
  return lp_norm(f.grid(), f.values(), N, 2.0, region);
}
template <int N, class Tag>
double l1_norm(const NodeField<N, Tag>& f, const Region& region = Region::cube()) {
  return lp_norm(f.grid(), f.values(), N, 1.0, region);
}

// Largest pointwise magnitude over the region.
template <int N, class Tag>
double max_norm(const NodeField<N, Tag>& f, const Region& region = Region::cube()) {
  double worst = 0.0;
  for (std::size_t node = 0; node < f.size(); ++node) {
    if (!region.contains(f.grid(), node)) continue;
    double s = 0.0;
    for (int c = 0; c < N; ++c) s += f(node, c) * f(node, c);
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

}  // namespace hopflift
