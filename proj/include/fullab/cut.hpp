#pragma once

#include <array>
#include <vector>

#include "fullab/spiral.hpp"
#include "fullab/triangulation.hpp"

namespace fullab {

// How many non-triangle facets a view vertex touches (0 or 1 big corner,
// exactly 2, exactly 3; more is impossible for these views).
enum class FacetVertexKind { Plain, TwoFacet, ThreeFacet };

std::vector<FacetVertexKind> classify_facet_vertices(const SubgraphView& view);

// Working patch during the cut procedure: rotation lists, one mark per corner
// (big = the corner spans a non-triangle facet), and for every working vertex
// the id of the original vertex it descends from. Vertices of degree 0 and 1
// are allowed.
struct CutGraph {
  std::vector<std::vector<int>> rot;
  std::vector<std::vector<char>> big;
  std::vector<int> origin;

  static CutGraph from_view(const SubgraphView& view);

  int size() const { return static_cast<int>(rot.size()); }
  int degree(int v) const { return static_cast<int>(rot[static_cast<std::size_t>(v)].size()); }
  int index_of(int v, int u) const;  // position of u in rot[v], -1 if absent
  int big_corners(int v) const;
  void check() const;  // throws on any broken structural invariant
};

// Phase 1: while some vertex touches two or more big facets, split it so each
// copy touches exactly one. Deterministic (lowest vertex, smallest arc).
void cut_phase1(CutGraph& g);

// Phase 2: repeatedly cut along a shortest allowed path between two degree-5
// vertices (an edge is allowed when both facets flanking it are triangles),
// re-running phase 1 after every cut. Components in which no degree-5 pair
// is joinable are left alone. Returns false when degree-5 vertices remain
// (stuck components or iteration cap).
bool cut_phase2(CutGraph& g);

enum class TruncationConvention { Rows, Full };

enum class ComponentClass { Triangle, Truncated, Other };

struct ComponentMatch {
  ComponentClass cls = ComponentClass::Other;
  int t = 0;                     // grid rows; Triangle and Truncated only
  std::array<int, 3> removed{};  // rows removed per corner, descending; Truncated only
};

// Reference patches: the t-row triangular grid (t >= 0; t = 0 is a single
// vertex) and the grid with removed[i] rows cut off corner i. Under the Full
// convention one extra row per corner is removed. Outer corners are big,
// corners spanning grid triangles are not.
CutGraph triangle_template(int t);
CutGraph truncated_template(int t, std::array<int, 3> removed, TruncationConvention conv);

ComponentMatch classify_component(const CutGraph& piece, TruncationConvention conv);

struct CutComponent {
  CutGraph piece;  // relabeled 0..k-1
  ComponentMatch cls_rows;
  ComponentMatch cls_full;
};

struct CutPartition {
  std::vector<CutComponent> components;
  bool clean = true;  // false when some component kept degree-5 vertices
};

// Full pipeline on the hexagon subgraph of g.
CutPartition cut_partition(const DualFullerene& g);

struct Conjecture2Verdict {
  bool all_triangular = false;  // every component matches a plain triangle
  bool zero_only = false;       // non-empty and every component is a single vertex
  bool consistent = false;      // (all_triangular && !zero_only) == !has_gsw
};

struct Conjecture2Report {
  int n = 0;
  bool has_gsw = false;
  bool empty_partition = false;
  bool clean = true;
  Conjecture2Verdict rows, full;
  bool consistent = false;  // either convention consistent
};

Conjecture2Report conjecture2_report(const DualFullerene& g);

}  // namespace fullab
