#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fullab/errors.hpp"

namespace fullab {

// Combinatorial embedding of a simple graph: for every vertex the cyclic
// (counterclockwise) order of its neighbours.  Faces, genus and mirror images
// are all derived from this; no coordinates anywhere.
class RotationSystem {
 public:
  RotationSystem() = default;

  // Validates symmetry (u lists v iff v lists u), simplicity (no loops, no
  // repeated neighbours) and degree >= 1.  Throws Error(NotSymmetric).
  static RotationSystem from_lists(std::vector<std::vector<int>> rot);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& lists() const { return rot_; }

  bool adjacent(int u, int v) const;
  // Position of u in v's rotation, -1 if absent.
  int index_of(int v, int u) const;

  // Next directed edge when walking a face boundary keeping the face on the
  // left: (u,v) -> (v, w) with w the successor of u in v's rotation.
  std::pair<int, int> face_next(int u, int v) const;

  // All face boundary cycles, each a list of vertices in traversal order.
  std::vector<std::vector<int>> trace_faces() const;

  // Euler check V - E + F == 2 for the embedding.
  bool is_sphere() const;

  // Reverses every rotation (orientation flip).
  RotationSystem mirror() const;

  // perm[old] = new label; rotations are re-expressed and re-indexed.
  RotationSystem relabel(const std::vector<int>& perm) const;

 private:
  std::vector<std::vector<int>> rot_;
  int edge_count_ = 0;
};

}  // namespace fullab
