#include <array>
#include <vector>

#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"

namespace fullab {

namespace {

// Frozen split of the n=36 seed. Vertices kCapStart.. form a small cap; the
// rest is the growth patch. Cutting the edges between them leaves the patch
// with a 6-vertex boundary cycle, kSeedBoundary, listed so the degree
// deficits 6-deg(v) measured inside the patch read kDeficit = (1,2,2,2,2,3).
// One growth step plants a new vertex across the deficit-1 corner (filling
// that vertex to degree 6) and re-glues the cap arcs shifted one position
// around the cycle. The deficit vector survives the step, so steps chain.
constexpr int kCapStart = 13;
constexpr std::array<int, 6> kSeedBoundary{7, 8, 9, 10, 11, 12};
constexpr std::array<int, 6> kDeficit{1, 2, 2, 2, 2, 3};

struct GrowState {
  std::vector<std::vector<int>> lists;     // whole graph, cap ids stay fixed
  std::array<int, 6> bd;                   // patch boundary cycle
  std::array<std::vector<int>, 6> arc;     // patch-interior arc at bd[k]
  std::array<std::vector<int>, 6> dotted;  // cap arc glued in after bd[k+1]
  std::vector<std::vector<int>> cap;       // cap rotations, -(k+1) marks bd[k]
};

GrowState read_seed(const DualFullerene& g) {
  const RotationSystem& rs = g.rot();
  GrowState st;
  st.lists = rs.lists();
  st.bd = kSeedBoundary;

  // at bd[k] the rotation must run prev, interior arc, next, cap arc
  for (int k = 0; k < 6; ++k) {
    const int v = st.bd[k];
    const int p = st.bd[(k + 5) % 6];
    const int nx = st.bd[(k + 1) % 6];
    const auto& r = st.lists[v];
    const int d = (int)r.size();
    int pos = rs.index_of(v, p);
    bool in_cap_arc = false;
    for (int s = 1; s < d; ++s) {
      int x = r[(pos + s) % d];
      if (x == nx) {
        in_cap_arc = true;
        continue;
      }
      if (!in_cap_arc) {
        if (x >= kCapStart)
          throw Error(ErrorCode::PatchAmbiguous, "grow_from_c36: stored boundary is stale");
        st.arc[k].push_back(x);
      } else {
        if (x < kCapStart)
          throw Error(ErrorCode::PatchAmbiguous, "grow_from_c36: cap arc is not contiguous");
        st.dotted[k].push_back(x);
      }
    }
    if (!in_cap_arc || 6 - (2 + (int)st.arc[k].size()) != kDeficit[k])
      throw Error(ErrorCode::PatchAmbiguous, "grow_from_c36: seed deficits are off");
  }

  for (int v = kCapStart; v < rs.vertex_count(); ++v) {
    std::vector<int> row;
    for (int x : st.lists[v]) {
      if (x < kCapStart) {
        int k = 0;
        while (k < 6 && st.bd[k] != x) ++k;
        if (k == 6)
          throw Error(ErrorCode::PatchAmbiguous, "grow_from_c36: cap touches patch interior");
        row.push_back(-(k + 1));
      } else {
        row.push_back(x);
      }
    }
    st.cap.push_back(std::move(row));
  }
  return st;
}

void grow_step(GrowState& st) {
  const int u = st.bd[0], a = st.bd[1], e = st.bd[5];
  const int w = (int)st.lists.size();

  // u leaves the boundary with a full degree-6 rotation
  std::vector<int> ur{e};
  ur.insert(ur.end(), st.arc[0].begin(), st.arc[0].end());
  ur.push_back(a);
  ur.push_back(w);
  st.lists[u] = std::move(ur);
  st.lists.emplace_back();

  std::array<std::vector<int>, 6> na;
  na[0] = {u};
  na[0].insert(na[0].end(), st.arc[1].begin(), st.arc[1].end());
  for (int k = 1; k <= 3; ++k) na[k] = std::move(st.arc[k + 1]);
  na[4] = std::move(st.arc[5]);
  na[4].push_back(u);
  na[5] = {u};
  st.arc = std::move(na);
  st.bd = {st.bd[1], st.bd[2], st.bd[3], st.bd[4], st.bd[5], w};
}

void reglue(GrowState& st) {
  for (int k = 0; k < 6; ++k) {
    const int v = st.bd[k];
    std::vector<int> row{st.bd[(k + 5) % 6]};
    row.insert(row.end(), st.arc[k].begin(), st.arc[k].end());
    row.push_back(st.bd[(k + 1) % 6]);
    row.insert(row.end(), st.dotted[k].begin(), st.dotted[k].end());
    st.lists[v] = std::move(row);
  }
  for (int i = 0; i < (int)st.cap.size(); ++i) {
    std::vector<int> row = st.cap[i];
    for (int& x : row)
      if (x < 0) x = st.bd[-x - 1];
    st.lists[kCapStart + i] = std::move(row);
  }
}

}  // namespace

DualFullerene grow_from_c36(int steps) {
  if (steps < 0) throw Error(ErrorCode::OutOfRange, "grow_from_c36: steps must be >= 0");
  DualFullerene g = seed_for(36);
  if (steps == 0) return g;
  GrowState st = read_seed(g);
  for (int s = 0; s < steps; ++s) grow_step(st);
  reglue(st);
  return DualFullerene::build(RotationSystem::from_lists(st.lists));
}

}  // namespace fullab
