#pragma once

#include <cstdint>

#include "fullab/cut.hpp"
#include "fullab/spiral.hpp"
#include "fullab/triangulation.hpp"

namespace fullab {

// The 12-vertex all-degree-5 triangulation, built from its oriented face
// list. Its primal is the dodecahedral cage, n = 20.
RotationSystem icosahedron();
DualFullerene dodecahedron();

// (5,0) nanotube: two pentagon caps joined by `belts` hexagon belts.
// n = 20 + 10*belts; belts = 0 gives the dodecahedral fullerene again.
DualFullerene nanotube_50(int belts);

// Goldberg-Coxeter transform of the dodecahedral fullerene: n = 20*T with
// T = p*p + p*q + q*q. Requires p >= q >= 0 and p + q >= 1. (1,0) is the
// identity, (1,1) the 60-face isolated-pentagon graph.
DualFullerene goldberg(int p, int q);

struct GswFreeSpec {
  int t = 2;  // >= 2
  TruncationConvention convention = TruncationConvention::Rows;
};

// Four triple-truncated triangular patches glued around four hexagonal
// facets; carries no generalized Stone-Wales path. n = 4*(t*t + 6*t + 7).
// Under the Full reading of the truncation depth the gluing cannot close up;
// that failure is detected and reported as GluingFailed.
DualFullerene gsw_free_family(const GswFreeSpec& spec);

// Double pyramid over an (m-2)-cycle, m >= 5. A valid sphere triangulation
// but not a fullerene (apex degree m-2); the flip chain starts here.
RotationSystem bipyramid(int m);

// The isomer with the smallest canonical pentagon vector, found by winding
// pentagon vectors in lexicographic order until one closes up. For
// n = 20 + 10r beyond the attempt budget the (5,0) nanotube is returned
// directly; other n beyond budget throw BudgetExceeded.
DualFullerene seed_for(int n, std::uint64_t budget = default_attempt_budget());

// Starting from seed_for(36), repeatedly inserts one vertex (two faces) at a
// fixed hexagon seam. n = 36 + 2*steps.
DualFullerene grow_from_c36(int steps);

}  // namespace fullab
