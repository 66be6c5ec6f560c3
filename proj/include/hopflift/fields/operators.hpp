// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "hopflift/fields/field.hpp"

namespace hopflift {

// One-dimensional first-derivative stencil at node i of n, before the 1/(2h)
// scaling: central (-1, 0, 1) inside, one-sided second order (-3, 4, -1) at
// the ends. Both the pointwise operators and the sparse matrices use it.
struct Stencil1D {
  std::array<int, 3> node{};
  std::array<double, 3> coeff{};
  int count = 0;
};
Stencil1D derivative_stencil(int i, int n);

// All first partials of an interleaved ncomp-component field.
// d[axis][node * ncomp + c] = partial of component c along axis.
struct Partials {
  int ncomp = 0;
  std::array<std::vector<double>, 3> d;

  double operator()(int axis, std::size_t node, int c) const {
    return d[axis][node * ncomp + c];
  }
};
Partials partials(const Grid3& grid, std::span<const double> values, int ncomp);

VecField grad(const ScalarField& f);
// Requires a degree-1 field; returns a degree-2 field.
VecField curl(const VecField& a);
// Requires a degree-2 field.
ScalarField div(const VecField& a);

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// n^3 x n^3 matrix of the derivative along `axis`, acting on one scalar
// component in node order. Identical to the pointwise operators.
SparseMatrix derivative_matrix(const Grid3& grid, int axis);

}  // namespace hopflift
