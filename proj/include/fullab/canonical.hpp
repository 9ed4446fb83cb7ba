#pragma once

#include <cstdint>
#include <vector>

#include "fullab/triangulation.hpp"

namespace fullab {

// Label-invariant fingerprint of an embedded graph. Two graphs get equal codes
// exactly when they are isomorphic as embedded sphere graphs, orientation
// ignored (both senses are swept). Compares lexicographically.
using CanonicalCode = std::vector<std::uint16_t>;

// BFS code from every directed edge in both rotation senses, lexicographic
// minimum. O(E^2) worst case, fine for the sizes handled here.
CanonicalCode canonical_code(const RotationSystem& rs);
CanonicalCode canonical_code(const DualFullerene& g);

bool is_isomorphic(const DualFullerene& a, const DualFullerene& b);
bool is_isomorphic(const RotationSystem& a, const RotationSystem& b);

// Canonical code for a patch: rotation lists plus a per-corner bit (the corner
// between rot[v][i] and rot[v][i+1], cyclically). Degree-0 and degree-1
// vertices are allowed. Corner bits participate in the code, so two patches
// compare equal only when some isomorphism matches both the embedding and the
// corner marking.
CanonicalCode canonical_corner_code(const std::vector<std::vector<int>>& rot,
                                    const std::vector<std::vector<char>>& corner_big);

}  // namespace fullab
