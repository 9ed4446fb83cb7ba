#pragma once

#include <vector>

#include "fullab/rotation.hpp"

namespace fullab {

// Dense real symmetric matrix, row major. Small orders only (a few hundred),
// so no packing tricks.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

SymMatrix adjacency_matrix(const std::vector<std::vector<int>>& lists);
SymMatrix degree_matrix(const std::vector<std::vector<int>>& lists);
SymMatrix adjacency_matrix(const RotationSystem& rs);
SymMatrix degree_matrix(const RotationSystem& rs);

// ca*A + cb*B
SymMatrix combine(const SymMatrix& A, double ca, const SymMatrix& B, double cb);

}  // namespace fullab
