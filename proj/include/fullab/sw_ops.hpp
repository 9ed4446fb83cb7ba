#pragma once

#include <utility>
#include <vector>

#include "fullab/triangulation.hpp"

namespace fullab {

// For edge (v1,v2) of a triangulation, the two vertices completing the two
// incident triangles. Returned as (v3,v4) where v1,v2 appear consecutively in
// that rotation order at v3 and in the order v2,v1 at v4.
std::pair<int, int> edge_mates(const RotationSystem& rs, int v1, int v2);

enum class FlipStatus { Ok, NotAnEdge, MultiEdge, DegreeUnderflow };

// Edge flip: remove (v1,v2), insert the cross edge between its mates, keeping
// the rotation system planar. Refuses when the cross edge already exists or
// when an endpoint would drop below degree 3. Degrees of the mates grow
// unchecked; callers that need a degree cap enforce it themselves.
FlipStatus psw_flip_inplace(std::vector<std::vector<int>>& rot, int v1, int v2);

// Copying wrapper over a validated triangulation. Throws on any FlipStatus
// other than Ok. Flipping the inserted cross edge undoes the move: every
// rotation comes back equal up to its stored starting point.
Triangulation psw_flip(const Triangulation& t, int v1, int v2);

// Edges (v1<v2), both endpoints degree 6, both mates degree 5, flip legal.
std::vector<std::pair<int, int>> classic_sw_sites(const DualFullerene& g);

// Path v_1..v_2w with consecutive vertices adjacent, every (v_i, v_i+2) also
// an edge, all vertices distinct, deg v_1 = deg v_2w = 5 and
// deg v_2 = deg v_2w-1 = 6.
struct GswPath {
  std::vector<int> v;

  friend bool operator==(const GswPath& a, const GswPath& b) { return a.v == b.v; }
  friend bool operator<(const GswPath& a, const GswPath& b) { return a.v < b.v; }
};

// All such paths up to half-length max_w (0 means no limit beyond the vertex
// count). Both directions of every path are reported unless dedup_reversal,
// which keeps the lexicographically smaller of the two.
std::vector<GswPath> find_gsw_paths(const DualFullerene& g, int max_w = 0,
                                    bool dedup_reversal = false);

bool has_gsw_path(const DualFullerene& g);

// Realizes the generalized rewrite as w-1 checked flips along the path: the
// i-th flip removes (v_2i, v_2i+1) and requires its current mates to be
// exactly {v_2i-1, v_2i+2}. Any violated precondition throws InvalidPath.
// The result swaps the degrees of the path ends (5,6 -> 6,5 on each side).
DualFullerene apply_gsw(const DualFullerene& g, const GswPath& path);

}  // namespace fullab
