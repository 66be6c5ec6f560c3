// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hopflift/fields/field.hpp"

namespace hopflift {

// Nodes where mollification is a full convolution: distance >= 3*eps from
// the cube boundary.
inline Region mollified_region(double eps) { return Region::interior(3.0 * eps); }

// Convolution with a Gaussian of standard deviation eps truncated to the ball
// of radius 3*eps, weights renormalized to sum to one. Nodes outside
// mollified_region(eps) keep their input values. Throws WidthTooSmall if
// eps < h.
std::vector<double> mollify(const Grid3& grid, std::span<const double> values, int ncomp,
                            double eps);

template <int N, class Tag>
NodeField<N, Tag> mollify(const NodeField<N, Tag>& f, double eps) {
  return NodeField<N, Tag>(f.grid(), mollify(f.grid(), f.values(), N, eps));
}

inline VecField mollify(const VecField& f, double eps) {
  return VecField(f.grid(), f.degree(), mollify(f.grid(), f.values(), 3, eps));
}

}  // namespace hopflift
