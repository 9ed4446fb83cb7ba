#pragma once

#include <array>
#include <vector>

#include "fullab/rotation.hpp"

namespace fullab {

// Sphere triangulation: every face of the embedding is a 3-gon and Euler holds.
class Triangulation {
 public:
  static Triangulation build(RotationSystem rs);

  const RotationSystem& rot() const { return rs_; }
  int vertex_count() const { return rs_.vertex_count(); }
  int edge_count() const { return rs_.edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  // Oriented face triples as traced from the rotation system.
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

 private:
  RotationSystem rs_;
  std::vector<std::array<int, 3>> faces_;
};

class SubgraphView;

// Dual of a fullerene: triangulation with degrees in {5,6}, exactly twelve 5s.
// n is the vertex count of the primal (the fullerene itself), m = n/2+2 here.
class DualFullerene {
 public:
  static DualFullerene build(RotationSystem rs);
  static DualFullerene build(std::vector<std::vector<int>> lists);
  static DualFullerene build(Triangulation t);

  const Triangulation& tri() const { return tri_; }
  const RotationSystem& rot() const { return tri_.rot(); }
  int m() const { return tri_.vertex_count(); }
  int n() const { return 2 * (m() - 2); }
  const std::vector<int>& degree5() const { return deg5_; }

  // Induced subgraph on the vertices of the given degree (5 or 6), with the
  // facial structure inherited from the parent embedding.
  SubgraphView subgraph(int degree) const;

 private:
  Triangulation tri_;
  std::vector<int> deg5_;
};

// Induced subgraph of a dual fullerene. Kept vertices are relabeled 0..k-1 in
// ascending parent order. corner_big[v][i] marks the corner between rot[v][i]
// and rot[v][i+1] (cyclic): false means the corner spans a parent triangle,
// true means it opens into a facet larger than a triangle (some parent vertex
// between the two neighbours was removed). Isolated vertices are allowed.
class SubgraphView {
 public:
  std::vector<int> parent_of;              // view label -> parent vertex id
  std::vector<int> view_of;                // parent vertex id -> view label or -1
  std::vector<std::vector<int>> rot;       // induced cyclic neighbour order, view labels
  std::vector<std::vector<char>> corner_big;

  int vertex_count() const { return static_cast<int>(rot.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int big_corner_count(int v) const;
  int edge_count() const;

  // Faces of the view embedding (isolated vertices contribute none).
  std::vector<std::vector<int>> facets() const;
  // Connected components as lists of view labels, ascending, deterministic.
  std::vector<std::vector<int>> components() const;
};

// Faces of the plane dual: one vertex per face of rs, adjacent iff the faces
// share an edge, rotation from walking each face boundary. For a triangulation
// this yields the 3-regular primal fullerene graph; applied twice it returns
// to the original (up to isomorphism, 3-connected inputs).
RotationSystem plane_dual(const RotationSystem& rs);

// Rebuilds a rotation system from consistently oriented triangles: each
// directed edge (a,b) with following vertex c contributes succ_b(a)=c. At most
// one missing face around each vertex is tolerated (the walk closes the gap);
// anything else throws ValidationFailed.
RotationSystem rotation_from_oriented_triangles(int m, const std::vector<std::array<int, 3>>& tris);

// Orients a triangle soup consistently: flips triangles so that every shared
// edge is used once in each direction. Seeded by triangles already oriented in
// `fixed` (kept as given). Throws ValidationFailed if no consistent
// orientation exists.
std::vector<std::array<int, 3>> orient_triangles(const std::vector<std::array<int, 3>>& fixed,
                                                 const std::vector<std::array<int, 3>>& loose);

}  // namespace fullab
