// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopflift/common/error.hpp"
#include "hopflift/fields/grid.hpp"

namespace hopflift {

// Node-collocated samples with NComp interleaved components per node
// (component index innermost). Tag keeps geometrically different fields with
// the same component count from being mixed up.
template <int NComp, class Tag>
class NodeField {
 public:
  static constexpr int kComponents = NComp;
  using Value = std::array<double, NComp>;

  explicit NodeField(Grid3 grid) : grid_(std::move(grid)), values_(grid_.size() * NComp, 0.0) {}

  NodeField(Grid3 grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size() * NComp) {
      throw Error(ErrorCode::GridMismatch,
                  "expected " + std::to_string(grid_.size() * NComp) + " values, got " +
                      std::to_string(values_.size()));
    }
  }

  const Grid3& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::vector<double>&& release() && { return std::move(values_); }

  double& operator()(std::size_t node, int c) { return values_[node * NComp + c]; }
  double operator()(std::size_t node, int c) const { return values_[node * NComp + c]; }

  Value at(std::size_t node) const {
    Value v;
    for (int c = 0; c < NComp; ++c) v[c] = values_[node * NComp + c];
    return v;
  }
  void set(std::size_t node, const Value& v) {
    for (int c = 0; c < NComp; ++c) values_[node * NComp + c] = v[c];
  }

  bool all_finite() const {
    for (double v : values_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

 private:
  Grid3 grid_;
  std::vector<double> values_;
};

struct ScalarTag {};
struct VectorTag {};
struct SphereTag {};
struct LiftTag {};

using ScalarField = NodeField<1, ScalarTag>;

// u: domain -> S^2, stored as (u1, u2, u3).
using SphereMapField = NodeField<3, SphereTag>;

// u_hat: domain -> S^3, stored as (x1, x2, x3, x4) ~ (z, w) with
// z = x1 + i x2 and w = x3 + i x4.
using LiftField = NodeField<4, LiftTag>;

// 1-forms are stored through the Euclidean identification with vectors,
// 2-forms through the Hodge star, so d acts as curl on degree 1 and as div on
// degree 2.
enum class FormDegree { One = 1, Two = 2 };

class VecField : public NodeField<3, VectorTag> {
 public:
  VecField(Grid3 grid, FormDegree degree) : NodeField(std::move(grid)), degree_(degree) {}
  VecField(Grid3 grid, FormDegree degree, std::vector<double> values)
      : NodeField(std::move(grid), std::move(values)), degree_(degree) {}

  FormDegree degree() const { return degree_; }

 private:
  FormDegree degree_;
};

// Hodge star between 1-forms and 2-forms; identity on the vector proxy.
inline VecField star(const VecField& f) {
  const FormDegree other = f.degree() == FormDegree::One ? FormDegree::Two : FormDegree::One;
  return VecField(f.grid(), other, std::vector<double>(f.values().begin(), f.values().end()));
}

// Largest | |v(node)| - 1 | over all nodes.
template <int NComp, class Tag>
double max_unit_defect(const NodeField<NComp, Tag>& f) {
  double worst = 0.0;
  for (std::size_t node = 0; node < f.size(); ++node) {
    double s = 0.0;
    for (int c = 0; c < NComp; ++c) s += f(node, c) * f(node, c);
    worst = std::max(worst, std::abs(std::sqrt(s) - 1.0));
  }
  return worst;
}

inline void require_same_grid(const Grid3& a, const Grid3& b) {
  if (!(a == b)) throw Error(ErrorCode::GridMismatch, "fields live on different grids");
}

// Linear combination alpha*a + beta*b; degrees must agree.
VecField combine(double alpha, const VecField& a, double beta, const VecField& b);

}  // namespace hopflift
