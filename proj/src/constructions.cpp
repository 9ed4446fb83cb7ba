#include "fullab/constructions.hpp"

#include <array>
#include <vector>

#include "fullab/errors.hpp"

namespace fullab {

namespace {

// u[i] = upper belt vertex, l[i] = lower belt vertex, indices mod 5.
constexpr int kIcosaM = 12;

}  // namespace

RotationSystem icosahedron() {
  std::vector<std::array<int, 3>> tris;
  tris.reserve(20);
  auto u = [](int i) { return 1 + (i % 5 + 5) % 5; };
  auto l = [](int i) { return 6 + (i % 5 + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    tris.push_back({0, u(i), u(i + 1)});
    tris.push_back({u(i + 1), u(i), l(i)});
    tris.push_back({u(i + 1), l(i), l(i + 1)});
    tris.push_back({l(i + 1), l(i), 11});
  }
  return rotation_from_oriented_triangles(kIcosaM, tris);
}

DualFullerene dodecahedron() { return DualFullerene::build(icosahedron()); }

DualFullerene nanotube_50(int belts) {
  if (belts < 0) throw Error(ErrorCode::OutOfRange, "nanotube_50: belts must be >= 0");
  const int rings = belts + 2;
  const int m = 2 + 5 * rings;
  std::vector<std::array<int, 3>> tris;
  tris.reserve(2 * m - 4);
  auto ring = [](int k, int i) { return 1 + 5 * k + (i % 5 + 5) % 5; };
  for (int i = 0; i < 5; ++i) tris.push_back({0, ring(0, i), ring(0, i + 1)});
  for (int k = 0; k + 1 < rings; ++k) {
    for (int i = 0; i < 5; ++i) {
      tris.push_back({ring(k, i + 1), ring(k, i), ring(k + 1, i)});
      tris.push_back({ring(k, i + 1), ring(k + 1, i), ring(k + 1, i + 1)});
    }
  }
  for (int i = 0; i < 5; ++i)
    tris.push_back({ring(rings - 1, i + 1), ring(rings - 1, i), m - 1});
  return DualFullerene::build(rotation_from_oriented_triangles(m, tris));
}

RotationSystem bipyramid(int m) {
  if (m < 5) throw Error(ErrorCode::OutOfRange, "bipyramid: need m >= 5");
  const int ring = m - 2;
  std::vector<std::array<int, 3>> tris;
  tris.reserve(2 * ring);
  auto rv = [ring](int i) { return 1 + (i % ring + ring) % ring; };
  for (int i = 0; i < ring; ++i) {
    tris.push_back({0, rv(i), rv(i + 1)});
    tris.push_back({rv(i + 1), rv(i), m - 1});
  }
  return rotation_from_oriented_triangles(m, tris);
}

DualFullerene seed_for(int n, std::uint64_t budget) {
  if (n < 20 || n % 2 != 0) throw Error(ErrorCode::InfeasibleN, "seed_for: need even n >= 20");
  if (n == 22) throw Error(ErrorCode::N22Forbidden, "seed_for: no isomer exists for n = 22");
  const int m = n / 2 + 2;
  WindupWorkspace ws;
  PentagonVector pv;
  pv.m = m;
  for (int i = 0; i < 12; ++i) pv.pos[i] = i + 1;
  std::uint64_t attempts = 0;
  for (;;) {
    if (attempts >= budget) {
      // (5,0) nanotubes are the lexicographic front-runners for n = 20 + 10r.
      if (n % 10 == 0) return nanotube_50((n - 20) / 10);
      throw Error(ErrorCode::BudgetExceeded, "seed_for: attempt budget exhausted");
    }
    ++attempts;
    if (windup(pv, ws) == WindupStatus::Ok)
      return DualFullerene::build(RotationSystem::from_lists(ws.lists()));
    // lexicographic successor among ascending 12-subsets of [1, m]
    int i = 11;
    while (i >= 0 && pv.pos[i] == m - (11 - i)) --i;
    if (i < 0) throw Error(ErrorCode::NoSpiralExists, "seed_for: no pentagon vector closes up");
    ++pv.pos[i];
    for (int j = i + 1; j < 12; ++j) pv.pos[j] = pv.pos[j - 1] + 1;
  }
}

}  // namespace fullab
