#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
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

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const int k = (int)a.size();
  for (int s = 0; s < k; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = a[i] == b[(i + s) % k];
    if (ok) return true;
  }
  return false;
}

std::set<std::pair<int, int>> edge_set(const std::vector<std::vector<int>>& rot) {
  std::set<std::pair<int, int>> es;
  for (int v = 0; v < (int)rot.size(); ++v)
    for (int u : rot[v])
      if (v < u) es.insert({v, u});
  return es;
}

GswPath reversed_path(const GswPath& p) {
  // walking the rewrite backwards visits the same rungs pairwise swapped
  GswPath r;
  for (std::size_t i = 0; i + 1 < p.v.size(); i += 2) {
    r.v.push_back(p.v[i + 1]);
    r.v.push_back(p.v[i]);
  }
  return r;
}

}  // namespace

TEST_CASE("edge mates complete the two triangles at an edge") {
  const RotationSystem b5 = bipyramid(5);
  CHECK(edge_mates(b5, 1, 2) == std::pair<int, int>{4, 0});
  CHECK(edge_mates(b5, 2, 1) == std::pair<int, int>{0, 4});
  const DualFullerene g = nanotube_50(1);
  for (int v = 0; v < g.m(); ++v)
    for (int u : g.rot().neighbors(v)) {
      auto [a, b] = edge_mates(g.rot(), v, u);
      CHECK(g.rot().adjacent(a, v));
      CHECK(g.rot().adjacent(a, u));
      CHECK(g.rot().adjacent(b, v));
      CHECK(g.rot().adjacent(b, u));
      CHECK(a != b);
    }
  CHECK(code_of([&] { edge_mates(b5, 0, 4); }) == ErrorCode::OutOfRange);
}

TEST_CASE("edge flip statuses on the 5-bipyramid") {
  auto lists = bipyramid(5).lists();
  CHECK(psw_flip_inplace(lists, 0, 4) == FlipStatus::NotAnEdge);  // poles not adjacent
  CHECK(psw_flip_inplace(lists, 1, 2) == FlipStatus::Ok);         // inserts the polar edge
  CHECK(psw_flip_inplace(lists, 1, 3) == FlipStatus::MultiEdge);  // 0-4 already there
  CHECK(psw_flip_inplace(lists, 2, 3) == FlipStatus::MultiEdge);
  CHECK(RotationSystem::from_lists(lists).is_sphere());
}

TEST_CASE("degree underflow guards a vertex about to drop under 3") {
  // raw lists, deliberately not a valid triangulation: deg(0) = 3 and the
  // cross edge 3-1 is absent, so the underflow check is what fires
  std::vector<std::vector<int>> rot = {{1, 2, 3}, {2, 0, 4}, {0, 1, 4, 3}, {0, 2, 4}, {1, 2, 3}};
  CHECK(psw_flip_inplace(rot, 0, 2) == FlipStatus::DegreeUnderflow);
}

TEST_CASE("checked flip copies, throws, and undoes the embedding") {
  const Triangulation t = Triangulation::build(nanotube_50(1).rot());
  int flips = 0;
  for (int v = 0; v < t.vertex_count() && flips < 8; ++v)
    for (int u : t.rot().neighbors(v)) {
      if (v > u || flips >= 8) continue;
      const auto [a, b] = edge_mates(t.rot(), v, u);
      if (t.rot().adjacent(a, b)) continue;
      const Triangulation once = psw_flip(t, v, u);
      CHECK(once.rot().adjacent(a, b));
      CHECK(!once.rot().adjacent(v, u));
      const Triangulation twice = psw_flip(once, a, b);
      for (int w = 0; w < t.vertex_count(); ++w)
        CHECK(cyclically_equal(twice.rot().neighbors(w), t.rot().neighbors(w)));
      ++flips;
    }
  CHECK(flips == 8);
  CHECK(code_of([&] { psw_flip(t, 0, t.vertex_count() - 1); }) == ErrorCode::OutOfRange);
  auto b5 = Triangulation::build(bipyramid(5));
  CHECK(code_of([&] {
          psw_flip(psw_flip(b5, 1, 2), 1, 3);
        }) == ErrorCode::MultiEdge);
}

TEST_CASE("classic rewrite sites need a 6-6 edge flanked by 5s") {
  CHECK(classic_sw_sites(dodecahedron()).empty());
  CHECK(classic_sw_sites(seed_for(24)).empty());
  const DualFullerene tube = nanotube_50(1);
  const auto sites = classic_sw_sites(tube);
  CHECK(sites.size() == 5);  // the five belt edges
  for (auto [v1, v2] : sites) {
    CHECK(v1 < v2);
    CHECK(tube.rot().degree(v1) == 6);
    CHECK(tube.rot().degree(v2) == 6);
    const auto [v3, v4] = edge_mates(tube.rot(), v1, v2);
    CHECK(tube.rot().degree(v3) == 5);
    CHECK(tube.rot().degree(v4) == 5);
    // the site is a length-4 rewrite path, so it must show up there too
    const auto paths = find_gsw_paths(tube, 2);
    CHECK(std::any_of(paths.begin(), paths.end(), [&, v1 = v1, v2 = v2](const GswPath& p) {
      return p.v == std::vector<int>{v3, v1, v2, v4} || p.v == std::vector<int>{v4, v1, v2, v3} ||
             p.v == std::vector<int>{v3, v2, v1, v4} || p.v == std::vector<int>{v4, v2, v1, v3};
    }));
  }
}

TEST_CASE("generalized path search counts on the named graphs") {
  CHECK(find_gsw_paths(dodecahedron()).empty());
  CHECK(!has_gsw_path(dodecahedron()));
  CHECK(find_gsw_paths(seed_for(24)).size() == 24);
  CHECK(find_gsw_paths(seed_for(24), 0, true).size() == 12);
  CHECK(has_gsw_path(seed_for(24)));
  CHECK(find_gsw_paths(nanotube_50(1)).size() == 20);

  for (const GswPath& p : find_gsw_paths(seed_for(28))) {
    const auto& v = p.v;
    REQUIRE(v.size() >= 4);
    REQUIRE(v.size() % 2 == 0);
    const DualFullerene g = seed_for(28);
    CHECK(g.rot().degree(v.front()) == 5);
    CHECK(g.rot().degree(v.back()) == 5);
    CHECK(g.rot().degree(v[1]) == 6);
    CHECK(g.rot().degree(v[v.size() - 2]) == 6);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(g.rot().adjacent(v[i], v[i + 1]));
    for (std::size_t i = 0; i + 2 < v.size(); ++i) CHECK(g.rot().adjacent(v[i], v[i + 2]));
  }

  // max_w truncates by half-length
  const auto all = find_gsw_paths(nanotube_50(2));
  const auto short_only = find_gsw_paths(nanotube_50(2), 2);
  CHECK(short_only.size() <= all.size());
  for (const GswPath& p : short_only) CHECK(p.v.size() == 4);
}

TEST_CASE("applying a generalized rewrite keeps the family and swaps end degrees") {
  const DualFullerene g = seed_for(24);
  const auto paths = find_gsw_paths(g);
  REQUIRE(!paths.empty());
  for (const GswPath& p : paths) {
    const DualFullerene h = apply_gsw(g, p);
    CHECK(h.n() == 24);
    CHECK((int)h.degree5().size() == 12);
    // C24 has a single isomer, so the rewrite is an automorphism move
    CHECK(is_isomorphic(h, g));
    CHECK(h.rot().degree(p.v.front()) == 6);
    CHECK(h.rot().degree(p.v.back()) == 6);
    CHECK(h.rot().degree(p.v[1]) == 5);
    CHECK(h.rot().degree(p.v[p.v.size() - 2]) == 5);
  }
}

TEST_CASE("the reversed path undoes the rewrite edge for edge") {
  for (const DualFullerene& g : {seed_for(24), nanotube_50(1), seed_for(32)}) {
    for (const GswPath& p : find_gsw_paths(g)) {
      const DualFullerene h = apply_gsw(g, p);
      const DualFullerene back = apply_gsw(h, reversed_path(p));
      CHECK(edge_set(back.rot().lists()) == edge_set(g.rot().lists()));
    }
  }
}

TEST_CASE("malformed paths are refused") {
  const DualFullerene g = seed_for(24);
  const auto paths = find_gsw_paths(g);
  REQUIRE(!paths.empty());
  GswPath p = paths[0];

  GswPath odd = p;
  odd.v.pop_back();
  CHECK(code_of([&] { apply_gsw(g, odd); }) == ErrorCode::InvalidPath);

  GswPath dup = p;
  dup.v[1] = dup.v[0];
  CHECK(code_of([&] { apply_gsw(g, dup); }) == ErrorCode::InvalidPath);

  GswPath head = p;
  std::swap(head.v[0], head.v[1]);  // front now has degree 6
  CHECK(code_of([&] { apply_gsw(g, head); }) == ErrorCode::InvalidPath);

  GswPath gap = p;
  for (int w = 0; w < g.m(); ++w)
    if (w != gap.v[0] && !g.rot().adjacent(gap.v[0], w)) {
      gap.v[1] = w;
      break;
    }
  CHECK(code_of([&] { apply_gsw(g, gap); }) == ErrorCode::InvalidPath);

  GswPath tiny;
  tiny.v = {0, 1};
  CHECK(code_of([&] { apply_gsw(g, tiny); }) == ErrorCode::InvalidPath);
}
