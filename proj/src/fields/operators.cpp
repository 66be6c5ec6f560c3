// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/fields/operators.hpp"

#include "hopflift/common/parallel.hpp"

namespace hopflift {

Stencil1D derivative_stencil(int i, int n) {
  Stencil1D s;
  if (i == 0) {
    s.node = {0, 1, 2};
    s.coeff = {-3.0, 4.0, -1.0};
    s.count = 3;
  } else if (i == n - 1) {
    s.node = {n - 1, n - 2, n - 3};
    s.coeff = {3.0, -4.0, 1.0};
    s.count = 3;
  } else {
    s.node = {i - 1, i + 1, 0};
    s.coeff = {-1.0, 1.0, 0.0};
    s.count = 2;
  }
  return s;
}

Partials partials(const Grid3& grid, std::span<const double> values, int ncomp) {
  const int n = grid.n();
  const std::size_t total = grid.size() * ncomp;
  if (values.size() != total) {
    throw Error(ErrorCode::GridMismatch, "value count does not match grid");
  }
  const double scale = 1.0 / (2.0 * grid.h());
  const std::size_t stride[3] = {1, static_cast<std::size_t>(n),
                                 static_cast<std::size_t>(n) * n};
  Partials out;
  out.ncomp = ncomp;
  for (auto& d : out.d) d.assign(total, 0.0);

  parallel_for(0, grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t node = lo; node < hi; ++node) {
      const auto ijk = grid.ijk(node);
      for (int axis = 0; axis < 3; ++axis) {
        const Stencil1D s = derivative_stencil(ijk[axis], n);
        const std::size_t base = node - ijk[axis] * stride[axis];
        for (int c = 0; c < ncomp; ++c) {
          double acc = 0.0;
          for (int t = 0; t < s.count; ++t) {
            acc += s.coeff[t] * values[(base + s.node[t] * stride[axis]) * ncomp + c];
          }
          out.d[axis][node * ncomp + c] = acc * scale;
        }
      }
    }
  });
  return out;
}

VecField grad(const ScalarField& f) {
  const Partials p = partials(f.grid(), f.values(), 1);
  VecField out(f.grid(), FormDegree::One);
  for (std::size_t node = 0; node < f.size(); ++node) {
    for (int axis = 0; axis < 3; ++axis) out(node, axis) = p.d[axis][node];
  }
  return out;
}

VecField curl(const VecField& a) {
  if (a.degree() != FormDegree::One) {
    throw Error(ErrorCode::InvalidArgument, "curl expects a degree-1 field");
  }
  const Partials p = partials(a.grid(), a.values(), 3);
  VecField out(a.grid(), FormDegree::Two);
  for (std::size_t node = 0; node < a.size(); ++node) {
    out(node, 0) = p(1, node, 2) - p(2, node, 1);
    out(node, 1) = p(2, node, 0) - p(0, node, 2);
    out(node, 2) = p(0, node, 1) - p(1, node, 0);
  }
  return out;
}

ScalarField div(const VecField& a) {
  if (a.degree() != FormDegree::Two) {
    throw Error(ErrorCode::InvalidArgument, "div expects a degree-2 field");
  }
  const Partials p = partials(a.grid(), a.values(), 3);
  ScalarField out(a.grid());
  for (std::size_t node = 0; node < a.size(); ++node) {
    out(node, 0) = p(0, node, 0) + p(1, node, 1) + p(2, node, 2);
  }
  return out;
}

SparseMatrix derivative_matrix(const Grid3& grid, int axis) {
  const int n = grid.n();
  const double scale = 1.0 / (2.0 * grid.h());
  const std::size_t stride[3] = {1, static_cast<std::size_t>(n),
                                 static_cast<std::size_t>(n) * n};
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(grid.size() * 2 + 6 * static_cast<std::size_t>(n) * n);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto ijk = grid.ijk(node);
    const Stencil1D s = derivative_stencil(ijk[axis], n);
    const std::size_t base = node - ijk[axis] * stride[axis];
    for (int t = 0; t < s.count; ++t) {
      triplets.emplace_back(static_cast<int>(node),
                            static_cast<int>(base + s.node[t] * stride[axis]),
                            s.coeff[t] * scale);
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(grid.size()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

VecField combine(double alpha, const VecField& a, double beta, const VecField& b) {
  require_same_grid(a.grid(), b.grid());
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::InvalidArgument, "cannot combine fields of different degree");
  }
  VecField out(a.grid(), a.degree());
  auto dst = out.values();
  auto x = a.values();
  auto y = b.values();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = alpha * x[i] + beta * y[i];
  return out;
}

}  // namespace hopflift
