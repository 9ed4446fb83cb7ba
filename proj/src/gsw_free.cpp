#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"

namespace fullab {

namespace {

struct Merge {
  std::vector<int> up;
  explicit Merge(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

// Four copies of one truncated triangular patch sit on the faces of a
// tetrahedron, rotated so the truncation cuts run along the tetrahedron
// edges (where they are sewn to the neighboring patch) and the remnants of
// the patch sides meet around the tetrahedron corners, leaving four
// hexagonal holes. Each hole is closed with three new vertices, which become
// that region's three pentagons.
DualFullerene gsw_free_family(const GswFreeSpec& spec) {
  const int t = spec.t;
  if (t < 2) throw Error(ErrorCode::OutOfRange, "gsw_free_family: need t >= 2");
  const int r = spec.convention == TruncationConvention::Rows ? t - 1 : t;
  const int side = 2 * t;

  auto kept = [&](int i, int j) {
    return j >= 0 && j <= i && i <= side && i >= r && i - j <= side - r && j <= side - r;
  };
  std::map<std::pair<int, int>, int> local;
  int P = 0;
  for (int i = 0; i <= side; ++i)
    for (int j = 0; j <= i; ++j)
      if (kept(i, j)) local[{i, j}] = P++;

  // patch boundary pieces, listed in the patch's ccw boundary order;
  // cut a runs along face edge a, the long remnant c wraps face corner c
  auto cut_list = [&](int a) {
    std::vector<std::pair<int, int>> L;
    for (int s = 0; s <= r; ++s) {
      if (a == 0)
        L.push_back({r, r - s});
      else if (a == 1)
        L.push_back({side - r + s, s});
      else
        L.push_back({side - s, side - r});
    }
    return L;
  };
  auto long_list = [&](int c) {
    std::vector<std::pair<int, int>> L;
    if (c == 1)
      for (int i = r; i <= side - r; ++i) L.push_back({i, 0});
    else if (c == 2)
      for (int j = r; j <= side - r; ++j) L.push_back({side, j});
    else
      for (int i = side - r; i >= r; --i) L.push_back({i, i});
    return L;
  };

  // oriented tetrahedron: every edge appears once in each direction
  const int face[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  auto raw = [&](int patch, std::pair<int, int> ij) { return patch * P + local.at(ij); };

  // sew the cuts: patch k lists its cut along the face's directed edge, the
  // partner patch lists the same seam along the reversed edge
  Merge ds(4 * P);
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 3; ++a) {
      const int x = face[k][a], y = face[k][(a + 1) % 3];
      for (int k2 = 0; k2 < 4; ++k2)
        for (int a2 = 0; a2 < 3; ++a2)
          if (face[k2][a2] == y && face[k2][(a2 + 1) % 3] == x) {
            const auto L1 = cut_list(a), L2 = cut_list(a2);
            for (int s = 0; s <= r; ++s) ds.unite(raw(k, L1[s]), raw(k2, L2[r - s]));
          }
    }

  std::vector<int> global(4 * P, -1);
  int m = 0;
  for (int i = 0; i < 4 * P; ++i)
    if (ds.find(i) == i) global[i] = m++;
  auto gid = [&](int patch, std::pair<int, int> ij) { return global[ds.find(raw(patch, ij))]; };

  std::vector<std::array<int, 3>> tris;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i <= side; ++i)
      for (int j = 0; j <= i; ++j) {
        if (kept(i, j) && kept(i + 1, j) && kept(i + 1, j + 1))
          tris.push_back({gid(k, {i, j}), gid(k, {i + 1, j}), gid(k, {i + 1, j + 1})});
        if (kept(i, j) && kept(i + 1, j + 1) && kept(i, j + 1))
          tris.push_back({gid(k, {i, j}), gid(k, {i + 1, j + 1}), gid(k, {i, j + 1})});
      }

  std::set<std::pair<int, int>> edges;
  for (const auto& tr : tris)
    for (int e = 0; e < 3; ++e)
      edges.insert({std::min(tr[e], tr[(e + 1) % 3]), std::max(tr[e], tr[(e + 1) % 3])});
  std::vector<int> deg(m, 0);
  for (const auto& e : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }

  // close each hole: chain the three reversed side remnants around a
  // tetrahedron corner into one hexagon, then cap it with three vertices
  int next_id = m;
  for (int v = 0; v < 4; ++v) {
    std::vector<std::vector<int>> segs;
    for (int k = 0; k < 4; ++k)
      for (int c = 0; c < 3; ++c)
        if (face[k][c] == v) {
          auto L = long_list(c);
          std::reverse(L.begin(), L.end());
          std::vector<int> seg;
          for (const auto& ij : L) seg.push_back(gid(k, ij));
          segs.push_back(seg);
        }
    if (segs.size() != 3 || segs[0].size() != 3)
      throw Error(ErrorCode::GluingFailed, "gsw_free_family: holes are not hexagonal");

    int first = 0;
    for (int s = 1; s < 3; ++s)
      if (segs[s][0] < segs[first][0]) first = s;
    std::vector<int> cycle;
    std::vector<char> used(3, 0);
    int cur = first;
    for (int step = 0; step < 3; ++step) {
      used[cur] = 1;
      cycle.push_back(segs[cur][0]);
      cycle.push_back(segs[cur][1]);
      int nxt = -1;
      for (int s = 0; s < 3; ++s)
        if (!used[s] && segs[s][0] == segs[cur][2]) nxt = s;
      if (step < 2 && nxt < 0)
        throw Error(ErrorCode::GluingFailed, "gsw_free_family: hole boundary does not close");
      if (step == 2 && segs[cur][2] != segs[first][0])
        throw Error(ErrorCode::GluingFailed, "gsw_free_family: hole boundary does not close");
      if (nxt >= 0) cur = nxt;
    }
    for (int s = 0; s < 6; ++s)
      if (deg[cycle[s]] != (s % 2 == 0 ? 5 : 4))
        throw Error(ErrorCode::GluingFailed, "gsw_free_family: hole degrees out of pattern");

    // start the cap at a degree-4 vertex so every rim vertex ends at six
    int h[6];
    for (int s = 0; s < 6; ++s) h[s] = cycle[(s + 1) % 6];
    const int f0 = next_id++, f1 = next_id++, f2 = next_id++;
    tris.push_back({h[0], h[1], f0});
    tris.push_back({h[1], h[2], f0});
    tris.push_back({h[2], h[3], f1});
    tris.push_back({h[3], h[4], f1});
    tris.push_back({h[4], h[5], f2});
    tris.push_back({h[5], h[0], f2});
    tris.push_back({h[2], f1, f0});
    tris.push_back({h[4], f2, f1});
    tris.push_back({h[0], f0, f2});
    tris.push_back({f0, f1, f2});
  }

  if (next_id != 2 * t * t + 12 * t + 16)
    throw Error(ErrorCode::GluingFailed, "gsw_free_family: unexpected vertex count after gluing");
  return DualFullerene::build(rotation_from_oriented_triangles(next_id, tris));
}

}  // namespace fullab
