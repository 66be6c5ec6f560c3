// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/fields/mollify.hpp"

#include <cmath>
#include <cstdint>

#include "hopflift/common/parallel.hpp"

namespace hopflift {

namespace {

struct KernelTap {
  std::ptrdiff_t offset;
  double weight;
};

std::vector<KernelTap> gaussian_taps(const Grid3& grid, double eps) {
  const double h = grid.h();
  const double support = 3.0 * eps;
  const int reach = static_cast<int>(std::floor(support / h + 1e-9));
  const std::ptrdiff_t n = grid.n();
  std::vector<KernelTap> taps;
  double total = 0.0;
  for (int dk = -reach; dk <= reach; ++dk) {
    for (int dj = -reach; dj <= reach; ++dj) {
      for (int di = -reach; di <= reach; ++di) {
        const double r2 = (di * di + dj * dj + dk * dk) * h * h;
        if (r2 > support * support * (1.0 + 1e-12)) continue;
        const double w = std::exp(-r2 / (2.0 * eps * eps));
        taps.push_back({(dk * n + dj) * n + di, w});
        total += w;
      }
    }
  }
  for (auto& t : taps) t.weight /= total;
  return taps;
}

}  // namespace

std::vector<double> mollify(const Grid3& grid, std::span<const double> values, int ncomp,
                            double eps) {
  if (values.size() != grid.size() * ncomp) {
    throw Error(ErrorCode::GridMismatch, "value count does not match grid");
  }
  if (!(eps >= grid.h() * (1.0 - 1e-12))) {
    throw Error(ErrorCode::WidthTooSmall, "mollifier width " + std::to_string(eps) +
                                              " is below the grid spacing");
  }
  const std::vector<KernelTap> taps = gaussian_taps(grid, eps);
  const Region region = mollified_region(eps);
  std::vector<double> out(values.begin(), values.end());

  parallel_for(0, grid.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<double> acc(ncomp);
    for (std::size_t node = lo; node < hi; ++node) {
      if (!region.contains(grid, node)) continue;
      std::fill(acc.begin(), acc.end(), 0.0);
      for (const KernelTap& t : taps) {
        const double* src = values.data() + (static_cast<std::ptrdiff_t>(node) + t.offset) * ncomp;
        for (int c = 0; c < ncomp; ++c) acc[c] += t.weight * src[c];
      }
      for (int c = 0; c < ncomp; ++c) out[node * ncomp + c] = acc[c];
    }
  });
  return out;
}

}  // namespace hopflift
