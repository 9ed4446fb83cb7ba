#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <optional>
#include <vector>

#include "fullab/canonical.hpp"
#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"
#include "fullab/spiral.hpp"
#include "fullab/sw_ops.hpp"

using namespace fullab;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("dodecahedron dual is the icosahedron with the all-pentagon spiral") {
  const DualFullerene g = dodecahedron();
  CHECK(g.n() == 20);
  CHECK(is_isomorphic(g.rot(), icosahedron()));
  const PentagonVector pv = canonical_pentagon_vector(g);
  for (int i = 0; i < 12; ++i) CHECK(pv.pos[i] == i + 1);
}

TEST_CASE("icosahedron fixture is the degree-five sphere") {
  const RotationSystem rs = icosahedron();
  CHECK(rs.vertex_count() == 12);
  CHECK(rs.edge_count() == 30);
  for (int v = 0; v < 12; ++v) CHECK(rs.degree(v) == 5);
  CHECK(rs.is_sphere());
}

TEST_CASE("nanotube caps plus belts give C_{20+10k}") {
  CHECK(is_isomorphic(nanotube_50(0), dodecahedron()));
  for (int belts = 1; belts <= 4; ++belts) {
    const DualFullerene g = nanotube_50(belts);
    CHECK(g.n() == 20 + 10 * belts);
    CHECK((int)g.degree5().size() == 12);
    CHECK(g.m() - 12 == 5 * belts);  // one pentagonal belt of hexagons per layer
  }
  CHECK(code_of([] { nanotube_50(-1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("goldberg triangulations scale as n = 20(p^2+pq+q^2)") {
  CHECK(is_isomorphic(goldberg(1, 0), dodecahedron()));
  CHECK(goldberg(1, 1).n() == 60);
  CHECK(goldberg(2, 0).n() == 80);
  CHECK(goldberg(2, 1).n() == 140);
  CHECK(goldberg(3, 0).n() == 180);
  for (const DualFullerene& g : {goldberg(1, 1), goldberg(2, 0)})
    CHECK(g.degree5().size() == 12);
  // chiral pair: (2,1) and its mirror are the same unlabeled graph
  const DualFullerene g21 = goldberg(2, 1);
  CHECK(canonical_code(g21.rot().mirror()) == canonical_code(g21.rot()));
  CHECK(code_of([] { goldberg(0, 0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { goldberg(1, 2); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { goldberg(-1, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("bipyramid rotation has two poles and an equator") {
  const RotationSystem b5 = bipyramid(5);
  std::vector<int> degs;
  for (int v = 0; v < 5; ++v) degs.push_back(b5.degree(v));
  CHECK(degs == std::vector<int>{3, 4, 4, 4, 3});
  for (int m : {5, 6, 9, 12}) {
    const RotationSystem b = bipyramid(m);
    CHECK(b.vertex_count() == m);
    CHECK(b.edge_count() == 3 * m - 6);
    CHECK(b.is_sphere());
    CHECK(Triangulation::build(b).face_count() == 2 * m - 4);
  }
  CHECK(code_of([] { bipyramid(4); }) == ErrorCode::OutOfRange);
}

TEST_CASE("hole-truncation family has no generalized rewrite path") {
  const GswFreeSpec spec{2, TruncationConvention::Rows};
  const DualFullerene g = gsw_free_family(spec);
  CHECK(g.n() == 92);  // 4(t^2+6t+7) at t=2
  CHECK(g.degree5().size() == 12);
  CHECK(!has_gsw_path(g));
  // full truncation removes too much for the holes to stay hexagonal
  CHECK(code_of([] {
          gsw_free_family({2, TruncationConvention::Full});
        }) == ErrorCode::GluingFailed);
  CHECK(code_of([] {
          gsw_free_family({1, TruncationConvention::Rows});
        }) == ErrorCode::OutOfRange);
}

TEST_CASE("seed picker covers feasible n and rejects the rest") {
  CHECK(is_isomorphic(seed_for(20), dodecahedron()));
  for (int n : {24, 28, 36, 40, 50, 70}) CHECK(seed_for(n).n() == n);
  CHECK(code_of([] { seed_for(22); }) == ErrorCode::N22Forbidden);
  CHECK(code_of([] { seed_for(21); }) == ErrorCode::InfeasibleN);
  CHECK(code_of([] { seed_for(18); }) == ErrorCode::InfeasibleN);
  // spiral search honours its attempt budget; belt-constructible n do not search
  CHECK(code_of([] { seed_for(152, 10); }) == ErrorCode::BudgetExceeded);
  CHECK(seed_for(150, 10).n() == 150);
}

TEST_CASE("C36 growth adds one hexagon ring slot per step") {
  CHECK(is_isomorphic(grow_from_c36(0), seed_for(36)));
  for (int steps = 0; steps <= 5; ++steps) {
    const DualFullerene g = grow_from_c36(steps);
    CHECK(g.n() == 36 + 2 * steps);
    CHECK(g.degree5().size() == 12);
  }
  // one step lands on an isolated-pentagon-free C38
  const IsomerList c38 = enumerate_isomers(38);
  CHECK(isomer_index(c38, canonical_pentagon_vector(grow_from_c36(1))) == 1);
  CHECK(code_of([] { grow_from_c36(-1); }) == ErrorCode::OutOfRange);
}
