// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

namespace hopflift {

// Structured node grid on the cube [-1,1]^3 with n nodes per axis.
//
// Linear node index is (k*n + j)*n + i with i along x (fastest). Nodes with
// |x| <= 1 - ball_margin form the inscribed-ball mask used for norm reporting.
class Grid3 {
 public:
  // Throws InvalidResolution if n < 3, InvalidArgument if ball_margin is
  // outside [0, 1).
  Grid3(int n, double ball_margin = 0.0);

  int n() const { return n_; }
  double h() const { return h_; }
  double ball_margin() const { return ball_margin_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * n_ + j) * n_ + i;
  }
  std::array<int, 3> ijk(std::size_t idx) const {
    const int i = static_cast<int>(idx % n_);
    const int j = static_cast<int>((idx / n_) % n_);
    const int k = static_cast<int>(idx / (static_cast<std::size_t>(n_) * n_));
    return {i, j, k};
  }

  // Exactly +-1 at the ends and antisymmetric: coord(n-1-i) == -coord(i).
  double coord(int i) const { return static_cast<double>(2 * i - (n_ - 1)) / (n_ - 1); }
  std::array<double, 3> position(std::size_t idx) const;
  // |x|^2 summed in sorted order, so it is invariant under axis permutations.
  double radius_squared(std::size_t idx) const;

  bool in_ball(std::size_t idx) const;
  // Number of node layers between the node and the nearest cube face.
  int boundary_layer(std::size_t idx) const;
  // Trapezoidal weight: h^3 times 1/2 per axis on which the node is extremal.
  double weight(std::size_t idx) const;

  bool operator==(const Grid3& other) const {
    return n_ == other.n_ && ball_margin_ == other.ball_margin_;
  }

 private:
  int n_;
  double h_;
  double ball_margin_;
};

Grid3 make_grid(int n, double ball_margin);

// Node selector for quadrature and statistics.
struct Region {
  bool ball_only = false;
  // Keep nodes whose distance to the cube boundary is at least this.
  double boundary_margin = 0.0;
  // Drop nodes with |x| below this.
  double origin_exclusion = 0.0;

  static Region cube() { return {}; }
  static Region ball() { return {true, 0.0, 0.0}; }
  static Region interior(double margin) { return {false, margin, 0.0}; }

  Region without_origin(double radius) const {
    Region r = *this;
    r.origin_exclusion = radius;
    return r;
  }

  bool contains(const Grid3& grid, std::size_t idx) const;
};

}  // namespace hopflift
