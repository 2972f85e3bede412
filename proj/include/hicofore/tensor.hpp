#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hicofore {

/// Dense rank-3 array of doubles, row-major in (d0, d1, d2).
/// Used for sample clouds (sample, series, horizon) and quantile tables
/// (series, horizon, quantile).
struct Cube {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<double> v;

  Cube() = default;
  Cube(int n0, int n1, int n2)
      : d0(n0), d1(n1), d2(n2),
        v(static_cast<std::size_t>(n0) * n1 * n2, 0.0) {
    if (n0 < 0 || n1 < 0 || n2 < 0) throw std::invalid_argument("Cube: negative dimension");
  }

  double& operator()(int i, int j, int k) {
    return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k];
  }
  double operator()(int i, int j, int k) const {
    return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k];
  }

  std::size_t size() const { return v.size(); }
  bool empty() const { return v.empty(); }
};

}  // namespace hicofore
