#include "fullab/triangulation.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fullab {

Triangulation Triangulation::build(RotationSystem rs) {
  auto faces = rs.trace_faces();
  long f = static_cast<long>(faces.size());
  if (rs.vertex_count() - rs.edge_count() + f != 2)
    throw Error(ErrorCode::NotSphere, "V-E+F=" + std::to_string(rs.vertex_count() - rs.edge_count() + f));
  Triangulation t;
  t.faces_.reserve(faces.size());
  for (const auto& face : faces) {
    if (face.size() != 3)
      throw Error(ErrorCode::NonTriangleFace, "face of length " + std::to_string(face.size()));
    t.faces_.push_back({face[0], face[1], face[2]});
  }
  t.rs_ = std::move(rs);
  return t;
}

DualFullerene DualFullerene::build(RotationSystem rs) { return build(Triangulation::build(std::move(rs))); }

DualFullerene DualFullerene::build(std::vector<std::vector<int>> lists) {
  return build(RotationSystem::from_lists(std::move(lists)));
}

DualFullerene DualFullerene::build(Triangulation t) {
  std::vector<int> deg5;
  for (int v = 0; v < t.vertex_count(); ++v) {
    int d = t.rot().degree(v);
    if (d == 5)
      deg5.push_back(v);
    else if (d != 6)
      throw Error(ErrorCode::BadDegreeProfile, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  if (deg5.size() != 12)
    throw Error(ErrorCode::BadDegreeProfile, std::to_string(deg5.size()) + " vertices of degree 5");
  DualFullerene g;
  g.tri_ = std::move(t);
  g.deg5_ = std::move(deg5);
  if (g.n() == 22) throw Error(ErrorCode::N22Forbidden, "no fullerene on 22 atoms exists");
  if (g.n() < 20) throw Error(ErrorCode::BadDegreeProfile, "n < 20");
  return g;
}

SubgraphView DualFullerene::subgraph(int degree) const {
  const auto& rs = rot();
  SubgraphView view;
  view.view_of.assign(m(), -1);
  for (int v = 0; v < m(); ++v) {
    if (rs.degree(v) == degree) {
      view.view_of[v] = static_cast<int>(view.parent_of.size());
      view.parent_of.push_back(v);
    }
  }
  const int k = static_cast<int>(view.parent_of.size());
  view.rot.resize(k);
  view.corner_big.resize(k);
  for (int v = 0; v < k; ++v) {
    int p = view.parent_of[v];
    const auto& nb = rs.neighbors(p);
    const int d = static_cast<int>(nb.size());
    std::vector<int> kept_pos;  // positions of kept neighbours within the parent rotation
    for (int i = 0; i < d; ++i)
      if (view.view_of[nb[i]] >= 0) kept_pos.push_back(i);
    for (int i : kept_pos) view.rot[v].push_back(view.view_of[nb[i]]);
    const int kd = static_cast<int>(kept_pos.size());
    view.corner_big[v].resize(kd);
    for (int i = 0; i < kd; ++i) {
      // The corner is a parent triangle exactly when the two kept neighbours
      // are consecutive in the parent rotation.
      int a = kept_pos[i], b = kept_pos[(i + 1) % kd];
      view.corner_big[v][i] = static_cast<char>((a + 1) % d != b || kd == 1);
    }
  }
  return view;
}

int SubgraphView::big_corner_count(int v) const {
  int c = 0;
  for (char b : corner_big[v]) c += b != 0;
  return c;
}

int SubgraphView::edge_count() const {
  long s = 0;
  for (const auto& nb : rot) s += static_cast<long>(nb.size());
  return static_cast<int>(s / 2);
}

std::vector<std::vector<int>> SubgraphView::facets() const {
  const int k = vertex_count();
  std::vector<std::vector<char>> visited(k);
  for (int v = 0; v < k; ++v) visited[v].assign(rot[v].size(), 0);
  auto index_of = [&](int v, int u) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
      if (rot[v][i] == u) return i;
    return -1;
  };
  std::vector<std::vector<int>> out;
  for (int v = 0; v < k; ++v) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      if (visited[v][i]) continue;
      std::vector<int> face;
      int cu = v, cv = rot[v][i];
      while (true) {
        int pos = index_of(cu, cv);
        if (visited[cu][pos]) break;
        visited[cu][pos] = 1;
        face.push_back(cu);
        int nxt = index_of(cv, cu);
        int nv = rot[cv][(nxt + 1) % rot[cv].size()];
        cu = cv;
        cv = nv;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<std::vector<int>> SubgraphView::components() const {
  const int k = vertex_count();
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : rot[v])
        if (comp[u] < 0) {
          comp[u] = nc;
          stack.push_back(u);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < k; ++v) out[comp[v]].push_back(v);
  return out;
}

RotationSystem plane_dual(const RotationSystem& rs) {
  const int m = rs.vertex_count();
  // face id per directed edge, keyed by (tail, position of head in tail's rotation)
  std::vector<std::vector<int>> face_of(m);
  for (int v = 0; v < m; ++v) face_of[v].assign(rs.degree(v), -1);
  std::vector<std::vector<std::pair<int, int>>> face_edges;  // directed edges around each face
  for (int v = 0; v < m; ++v) {
    for (int i = 0; i < rs.degree(v); ++i) {
      if (face_of[v][i] >= 0) continue;
      int id = static_cast<int>(face_edges.size());
      face_edges.emplace_back();
      int cu = v, cv = rs.neighbors(v)[i];
      while (true) {
        int pos = rs.index_of(cu, cv);
        if (face_of[cu][pos] >= 0) break;
        face_of[cu][pos] = id;
        face_edges[id].emplace_back(cu, cv);
        auto [nu, nv] = rs.face_next(cu, cv);
        cu = nu;
        cv = nv;
      }
    }
  }
  std::vector<std::vector<int>> lists(face_edges.size());
  for (std::size_t f = 0; f < face_edges.size(); ++f) {
    for (auto [u, v] : face_edges[f]) {
      // neighbour across edge (u,v) is the face holding the reverse edge
      lists[f].push_back(face_of[v][rs.index_of(v, u)]);
    }
  }
  return RotationSystem::from_lists(std::move(lists));
}

RotationSystem rotation_from_oriented_triangles(int m, const std::vector<std::array<int, 3>>& tris) {
  // succ[v] maps neighbour a to the neighbour after a in v's rotation.
  std::vector<std::map<int, int>> succ(m);
  for (const auto& t : tris) {
    for (int i = 0; i < 3; ++i) {
      int a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
      // directed edge (a,b) followed by c: at b the successor of a is c
      auto [it, fresh] = succ[b].emplace(a, c);
      if (!fresh && it->second != c)
        throw Error(ErrorCode::ValidationFailed, "conflicting orientation at vertex " + std::to_string(b));
    }
  }
  std::vector<std::vector<int>> lists(m);
  for (int v = 0; v < m; ++v) {
    auto& sv = succ[v];
    if (sv.empty()) throw Error(ErrorCode::ValidationFailed, "vertex " + std::to_string(v) + " in no triangle");
    // start of the walk: a neighbour that is nobody's successor (one missing
    // face), otherwise any neighbour (full cycle)
    std::map<int, int> indeg;
    for (auto& [a, b] : sv) indeg[b]++;
    int start = -1, missing = 0;
    for (auto& [a, b] : sv)
      if (!indeg.count(a)) {
        start = a;
        ++missing;
      }
    if (missing > 1)
      throw Error(ErrorCode::ValidationFailed, "vertex " + std::to_string(v) + " has " + std::to_string(missing) + " boundary gaps");
    if (start < 0) start = sv.begin()->first;
    int cur = start;
    auto& out = lists[v];
    for (std::size_t steps = 0; steps < sv.size(); ++steps) {
      out.push_back(cur);
      auto it = sv.find(cur);
      if (it == sv.end()) throw Error(ErrorCode::ValidationFailed, "broken fan at vertex " + std::to_string(v));
      cur = it->second;
    }
    if (out.size() != sv.size() || (missing == 0 && cur != start))
      throw Error(ErrorCode::ValidationFailed, "fan at vertex " + std::to_string(v) + " does not close");
  }
  return RotationSystem::from_lists(std::move(lists));
}

std::vector<std::array<int, 3>> orient_triangles(const std::vector<std::array<int, 3>>& fixed,
                                                 const std::vector<std::array<int, 3>>& loose) {
  // Directed edge usage across everything oriented so far.
  std::map<std::pair<int, int>, int> used;
  auto mark = [&](const std::array<int, 3>& t) {
    for (int i = 0; i < 3; ++i) used[{t[i], t[(i + 1) % 3]}]++;
  };
  for (const auto& t : fixed) mark(t);
  std::vector<std::array<int, 3>> pending = loose, out = fixed;
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    for (std::size_t i = 0; i < pending.size();) {
      auto t = pending[i];
      std::array<int, 3> rev{t[0], t[2], t[1]};
      auto blocked = [&](const std::array<int, 3>& x) {
        for (int j = 0; j < 3; ++j)
          if (used.count({x[j], x[(j + 1) % 3]})) return true;
        return false;
      };
      bool bf = blocked(t), br = blocked(rev);
      if (bf && br) throw Error(ErrorCode::ValidationFailed, "triangle soup admits no consistent orientation");
      if (bf || br) {
        const auto& pick = bf ? rev : t;
        mark(pick);
        out.push_back(pick);
        pending.erase(pending.begin() + static_cast<long>(i));
        progress = true;
      } else {
        ++i;
      }
    }
    if (!progress && !pending.empty()) {
      // disconnected patch: fix one arbitrarily and resume
      mark(pending.front());
      out.push_back(pending.front());
      pending.erase(pending.begin());
      progress = true;
    }
  }
  return out;
}

}  // namespace fullab
