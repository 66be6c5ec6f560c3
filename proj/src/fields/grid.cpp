// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/fields/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopflift/common/error.hpp"

namespace hopflift {

Grid3::Grid3(int n, double ball_margin) : n_(n), h_(0.0), ball_margin_(ball_margin) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidResolution, "need at least 3 nodes per axis, got " +
                                                  std::to_string(n));
  }
  if (!(ball_margin >= 0.0 && ball_margin < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "ball margin must lie in [0, 1)");
  }
  h_ = 2.0 / (n - 1);
}

Grid3 make_grid(int n, double ball_margin) { return Grid3(n, ball_margin); }

std::array<double, 3> Grid3::position(std::size_t idx) const {
  const auto [i, j, k] = ijk(idx);
  return {coord(i), coord(j), coord(k)};
}

double Grid3::radius_squared(std::size_t idx) const {
  auto p = position(idx);
  std::array<double, 3> sq{p[0] * p[0], p[1] * p[1], p[2] * p[2]};
  std::sort(sq.begin(), sq.end());
  return (sq[0] + sq[1]) + sq[2];
}

bool Grid3::in_ball(std::size_t idx) const {
  const double r = 1.0 - ball_margin_;
  return radius_squared(idx) <= r * r;
}

int Grid3::boundary_layer(std::size_t idx) const {
  const auto [i, j, k] = ijk(idx);
  const int last = n_ - 1;
  return std::min({i, last - i, j, last - j, k, last - k});
}

double Grid3::weight(std::size_t idx) const {
  const auto [i, j, k] = ijk(idx);
  const int last = n_ - 1;
  double w = h_ * h_ * h_;
  for (int c : {i, j, k}) {
    if (c == 0 || c == last) w *= 0.5;
  }
  return w;
}

bool Region::contains(const Grid3& grid, std::size_t idx) const {
  if (ball_only && !grid.in_ball(idx)) return false;
  if (boundary_margin > 0.0 &&
      grid.boundary_layer(idx) * grid.h() < boundary_margin - 1e-12) {
    return false;
  }
  if (origin_exclusion > 0.0 &&
      grid.radius_squared(idx) < origin_exclusion * origin_exclusion) {
    return false;
  }
  return true;
}

}  // namespace hopflift
