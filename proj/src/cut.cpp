#include "fullab/cut.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "fullab/errors.hpp"
#include "fullab/sw_ops.hpp"

namespace fullab {

std::vector<FacetVertexKind> classify_facet_vertices(const SubgraphView& view) {
  std::vector<FacetVertexKind> out(static_cast<std::size_t>(view.vertex_count()));
  for (int v = 0; v < view.vertex_count(); ++v) {
    switch (view.big_corner_count(v)) {
      case 0:
      case 1:
        out[v] = FacetVertexKind::Plain;
        break;
      case 2:
        out[v] = FacetVertexKind::TwoFacet;
        break;
      case 3:
        out[v] = FacetVertexKind::ThreeFacet;
        break;
      default:
        throw Error(ErrorCode::ValidationFailed, "view vertex touches more than three big facets");
    }
  }
  return out;
}

CutGraph CutGraph::from_view(const SubgraphView& view) {
  CutGraph g;
  g.rot = view.rot;
  g.big = view.corner_big;
  g.origin = view.parent_of;
  return g;
}

int CutGraph::index_of(int v, int u) const {
  const auto& l = rot[static_cast<std::size_t>(v)];
  for (int i = 0; i < (int)l.size(); ++i)
    if (l[i] == u) return i;
  return -1;
}

int CutGraph::big_corners(int v) const {
  int c = 0;
  for (char b : big[static_cast<std::size_t>(v)]) c += b != 0;
  return c;
}

void CutGraph::check() const {
  if (rot.size() != big.size() || rot.size() != origin.size())
    throw Error(ErrorCode::ValidationFailed, "cut graph arrays disagree in length");
  for (int v = 0; v < size(); ++v) {
    if (rot[v].size() != big[v].size())
      throw Error(ErrorCode::ValidationFailed, "corner marks must match the rotation length");
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      const int u = rot[v][i];
      if (u < 0 || u >= size() || u == v)
        throw Error(ErrorCode::ValidationFailed, "rotation entry out of range");
      for (std::size_t j = i + 1; j < rot[v].size(); ++j)
        if (rot[v][j] == u) throw Error(ErrorCode::ValidationFailed, "repeated neighbor");
      if (index_of(u, v) < 0) throw Error(ErrorCode::ValidationFailed, "asymmetric adjacency");
    }
  }
}

namespace {

// Splits one vertex with >= 2 big corners: the arc between two cyclically
// consecutive big corners with the fewest edges moves to a fresh copy
// (ties: smallest member origin, then lowest corner position). Both halves
// get a big wrap corner; neighbors are re-pointed, their marks untouched.
void split_once(CutGraph& g, int v) {
  const std::vector<int> l = g.rot[v];
  const std::vector<char> bb = g.big[v];
  const int d = (int)l.size();
  std::vector<int> bigpos;
  for (int i = 0; i < d; ++i)
    if (bb[i]) bigpos.push_back(i);
  const int s = (int)bigpos.size();

  int bx = -1;
  std::tuple<int, int, int> bestkey{std::numeric_limits<int>::max(), 0, 0};
  for (int x = 0; x < s; ++x) {
    const int from = bigpos[x], to = bigpos[(x + 1) % s];
    const int cnt = ((to - from) % d + d) % d;
    int mo = std::numeric_limits<int>::max();
    for (int i = 0; i < cnt; ++i) mo = std::min(mo, g.origin[l[(from + 1 + i) % d]]);
    const std::tuple<int, int, int> key{cnt, mo, from};
    if (key < bestkey) {
      bestkey = key;
      bx = x;
    }
  }
  const int from = bigpos[bx], to = bigpos[(bx + 1) % s];
  const int cnt = ((to - from) % d + d) % d;

  const int nv = g.size();
  std::vector<int> crot;
  std::vector<char> cbig;
  for (int i = 0; i < cnt; ++i) {
    const int pos = (from + 1 + i) % d;
    crot.push_back(l[pos]);
    cbig.push_back(i + 1 == cnt ? char(1) : bb[pos]);
    g.rot[l[pos]][g.index_of(l[pos], v)] = nv;
  }
  std::vector<int> krot;
  std::vector<char> kbig;
  const int keep = d - cnt;
  for (int i = 0; i < keep; ++i) {
    const int pos = (to + 1 + i) % d;
    krot.push_back(l[pos]);
    kbig.push_back(i + 1 == keep ? char(1) : bb[pos]);
  }
  g.rot[v] = krot;
  g.big[v] = kbig;
  g.rot.push_back(crot);
  g.big.push_back(cbig);
  g.origin.push_back(g.origin[v]);
}

bool edge_allowed(const CutGraph& g, int v, int pos) {
  const int u = g.rot[v][pos];
  if (g.big[v][pos]) return false;
  return !g.big[u][g.index_of(u, v)];
}

std::vector<int> bfs_allowed(const CutGraph& g, int src) {
  std::vector<int> dist(g.size(), -1);
  std::vector<int> q{src};
  dist[src] = 0;
  for (std::size_t h = 0; h < q.size(); ++h) {
    const int v = q[h];
    for (int i = 0; i < g.degree(v); ++i) {
      const int u = g.rot[v][i];
      if (dist[u] < 0 && edge_allowed(g, v, i)) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return dist;
}

// Duplicates every vertex of the path and splits its surroundings between
// the two copies; both sides gain one big seam corner per vertex. Endpoints
// are degree-5 vertices whose single big corner cannot flank a path edge.
void cut_along(CutGraph& g, const std::vector<int>& p) {
  const int L = (int)p.size() - 1;
  const int N = g.size();
  std::vector<int> pos_in_path(N, -1);
  for (int i = 0; i <= L; ++i) pos_in_path[p[i]] = i;
  auto copy_id = [&](int i) { return N + i; };

  std::vector<std::vector<int>> oldrot(p.size());
  std::vector<std::vector<char>> oldbig(p.size());
  for (int i = 0; i <= L; ++i) {
    oldrot[i] = g.rot[p[i]];
    oldbig[i] = g.big[p[i]];
  }

  // 0 = stays with the original, 1 = moves to the copy, 2 = path edge
  std::vector<std::vector<char>> side(p.size());
  for (int i = 0; i <= L; ++i) {
    const int d = (int)oldrot[i].size();
    side[i].assign(d, 0);
    if (i == 0 || i == L) {
      if (d != 5) throw Error(ErrorCode::ValidationFailed, "cut endpoint must have degree 5");
      int bpos = -1, nbig = 0;
      for (int x = 0; x < d; ++x)
        if (oldbig[i][x]) {
          bpos = x;
          ++nbig;
        }
      if (nbig != 1)
        throw Error(ErrorCode::ValidationFailed, "cut endpoint must touch exactly one big facet");
      const int pn = g.index_of(p[i], i == 0 ? p[1] : p[L - 1]);
      const int off = ((bpos - pn) % d + d) % d;
      if (off < 1 || off > 3)
        throw Error(ErrorCode::ValidationFailed, "endpoint big corner flanks the path");
      side[i][pn] = 2;
      // i == 0: arc after the path edge stays, rest moves; i == L mirrored
      for (int k = 1; k <= off; ++k) side[i][(pn + k) % d] = (i == 0) ? 0 : 1;
      for (int k = off + 1; k < d; ++k) side[i][(pn + k) % d] = (i == 0) ? 1 : 0;
    } else {
      const int pp = g.index_of(p[i], p[i - 1]);
      const int pn = g.index_of(p[i], p[i + 1]);
      side[i][pp] = side[i][pn] = 2;
      for (int x = (pp + 1) % d; x != pn; x = (x + 1) % d) side[i][x] = 1;
    }
  }

  // a rotation entry of a path vertex, mapped to the given side; chords
  // between path vertices must sit on the same side seen from both ends
  auto map_entry = [&](int i, int x) {
    const int u = oldrot[i][x];
    const char sd = side[i][x];
    const int k = pos_in_path[u];
    if (k < 0) return u;
    int back = -1;
    for (int y = 0; y < (int)oldrot[k].size(); ++y)
      if (oldrot[k][y] == p[i]) back = side[k][y];
    if (back != sd) throw Error(ErrorCode::ValidationFailed, "cut chord changes sides");
    return sd ? copy_id(k) : u;
  };

  std::vector<std::vector<int>> orot(p.size()), crot(p.size());
  std::vector<std::vector<char>> obig(p.size()), cbig(p.size());
  for (int i = 0; i <= L; ++i) {
    const int d = (int)oldrot[i].size();
    auto& l = oldrot[i];
    auto& bb = oldbig[i];
    if (i == 0) {
      const int pn = g.index_of(p[0], p[1]);
      int off = 0;
      while (side[0][(pn + off + 1) % d] == 0) ++off;  // kept arc length
      orot[0] = {p[1]};
      obig[0] = {bb[pn]};
      for (int k = 1; k <= off; ++k) {
        orot[0].push_back(map_entry(0, (pn + k) % d));
        obig[0].push_back(k == off ? char(1) : bb[(pn + k) % d]);
      }
      for (int k = off + 1; k < d; ++k) {
        crot[0].push_back(map_entry(0, (pn + k) % d));
        cbig[0].push_back(bb[(pn + k) % d]);
      }
      crot[0].push_back(copy_id(1));
      cbig[0].push_back(1);
    } else if (i == L) {
      const int pp = g.index_of(p[L], p[L - 1]);
      int off = 0;
      while (side[L][(pp + off + 1) % d] == 1) ++off;  // copied arc length
      crot[L] = {copy_id(L - 1)};
      cbig[L] = {bb[pp]};
      for (int k = 1; k <= off; ++k) {
        crot[L].push_back(map_entry(L, (pp + k) % d));
        cbig[L].push_back(k == off ? char(1) : bb[(pp + k) % d]);
      }
      orot[L] = {p[L - 1]};
      obig[L] = {1};
      for (int k = off + 1; k < d; ++k) {
        orot[L].push_back(map_entry(L, (pp + k) % d));
        obig[L].push_back(bb[(pp + k) % d]);
      }
    } else {
      const int pp = g.index_of(p[i], p[i - 1]);
      const int pn = g.index_of(p[i], p[i + 1]);
      orot[i] = {p[i - 1], p[i + 1]};
      obig[i] = {char(1), bb[pn]};
      for (int x = (pn + 1) % d; x != pp; x = (x + 1) % d) {
        orot[i].push_back(map_entry(i, x));
        obig[i].push_back(bb[x]);
      }
      crot[i] = {copy_id(i - 1)};
      cbig[i] = {bb[pp]};
      for (int x = (pp + 1) % d; x != pn; x = (x + 1) % d) {
        crot[i].push_back(map_entry(i, x));
        cbig[i].push_back(bb[x]);
      }
      crot[i].push_back(copy_id(i + 1));
      cbig[i].push_back(1);
    }
  }

  // point the moved neighbors at the copies
  for (int i = 0; i <= L; ++i)
    for (int x = 0; x < (int)oldrot[i].size(); ++x) {
      const int u = oldrot[i][x];
      if (side[i][x] == 1 && pos_in_path[u] < 0)
        g.rot[u][g.index_of(u, p[i])] = copy_id(i);
    }
  for (int i = 0; i <= L; ++i) {
    g.rot.push_back(crot[i]);
    g.big.push_back(cbig[i]);
    g.origin.push_back(g.origin[p[i]]);
  }
  for (int i = 0; i <= L; ++i) {
    g.rot[p[i]] = orot[i];
    g.big[p[i]] = obig[i];
  }
}

void freeze_component(const CutGraph& g, int src, std::vector<char>& frozen) {
  std::vector<int> q{src};
  frozen[src] = 1;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (int u : g.rot[q[h]])
      if (!frozen[u]) {
        frozen[u] = 1;
        q.push_back(u);
      }
}

}  // namespace

void cut_phase1(CutGraph& g) {
  for (;;) {
    int v = -1;
    for (int i = 0; i < g.size() && v < 0; ++i)
      if (g.big_corners(i) >= 2) v = i;
    if (v < 0) return;
    split_once(g, v);
  }
}

bool cut_phase2(CutGraph& g) {
  cut_phase1(g);
  const int cap = 4 * (g.size() + 64);
  int cuts = 0;
  std::vector<char> frozen;
  for (;;) {
    frozen.resize(g.size(), 0);
    std::vector<int> fives;
    for (int v = 0; v < g.size(); ++v)
      if (!frozen[v] && g.degree(v) == 5) fives.push_back(v);
    if (fives.empty()) {
      for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 5) return false;
      return true;
    }
    if (cuts >= cap) return false;

    int bL = std::numeric_limits<int>::max(), ba = bL, bb = bL;
    for (int s : fives) {
      const auto dist = bfs_allowed(g, s);
      for (int t : fives) {
        if (t == s || dist[t] < 0) continue;
        const int a = std::min(s, t), b = std::max(s, t);
        if (std::tie(dist[t], a, b) < std::tie(bL, ba, bb)) {
          bL = dist[t];
          ba = a;
          bb = b;
        }
      }
    }
    if (bL == std::numeric_limits<int>::max()) {
      for (int s : fives) freeze_component(g, s, frozen);
      continue;
    }

    // lexicographically smallest shortest allowed path from ba to bb
    const auto da = bfs_allowed(g, ba), db = bfs_allowed(g, bb);
    std::vector<int> path{ba};
    int cur = ba;
    for (int step = 0; step < bL; ++step) {
      int best = -1;
      for (int i = 0; i < g.degree(cur); ++i) {
        const int w = g.rot[cur][i];
        if (!edge_allowed(g, cur, i)) continue;
        if (da[w] == step + 1 && db[w] == bL - step - 1 && (best < 0 || w < best)) best = w;
      }
      if (best < 0) throw Error(ErrorCode::ValidationFailed, "path reconstruction failed");
      path.push_back(best);
      cur = best;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (g.degree(path[i]) == 5)
        throw Error(ErrorCode::ValidationFailed, "degree-5 vertex inside a shortest pair path");

    cut_along(g, path);
    ++cuts;
    cut_phase1(g);
  }
}

CutPartition cut_partition(const DualFullerene& g) {
  const SubgraphView view = g.subgraph(6);
  CutPartition out;
  if (view.vertex_count() == 0) return out;
  CutGraph work = CutGraph::from_view(view);
  cut_phase1(work);
  out.clean = cut_phase2(work);

  std::vector<int> comp(work.size(), -1);
  int nc = 0;
  for (int v = 0; v < work.size(); ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> q{v};
    comp[v] = nc;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int u : work.rot[q[h]])
        if (comp[u] < 0) {
          comp[u] = nc;
          q.push_back(u);
        }
    ++nc;
  }
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < work.size(); ++v) members[comp[v]].push_back(v);

  for (int c = 0; c < nc; ++c) {
    CutComponent piece;
    std::vector<int> local(work.size(), -1);
    for (int i = 0; i < (int)members[c].size(); ++i) local[members[c][i]] = i;
    for (int v : members[c]) {
      std::vector<int> row;
      for (int u : work.rot[v]) row.push_back(local[u]);
      piece.piece.rot.push_back(row);
      piece.piece.big.push_back(work.big[v]);
      piece.piece.origin.push_back(work.origin[v]);
    }
    piece.cls_rows = classify_component(piece.piece, TruncationConvention::Rows);
    piece.cls_full = classify_component(piece.piece, TruncationConvention::Full);
    out.components.push_back(std::move(piece));
  }
  return out;
}

Conjecture2Report conjecture2_report(const DualFullerene& g) {
  Conjecture2Report r;
  r.n = g.n();
  r.has_gsw = has_gsw_path(g);
  const CutPartition p = cut_partition(g);
  r.clean = p.clean;
  r.empty_partition = p.components.empty();
  auto verdict = [&](bool rows) {
    Conjecture2Verdict v;
    v.all_triangular = true;
    v.zero_only = !p.components.empty();
    for (const auto& c : p.components) {
      const ComponentMatch& m = rows ? c.cls_rows : c.cls_full;
      if (m.cls != ComponentClass::Triangle) {
        v.all_triangular = false;
        v.zero_only = false;
      } else if (m.t != 0) {
        v.zero_only = false;
      }
    }
    v.consistent = (v.all_triangular && !v.zero_only) == !r.has_gsw;
    return v;
  };
  r.rows = verdict(true);
  r.full = verdict(false);
  r.consistent = r.rows.consistent || r.full.consistent;
  return r;
}

}  // namespace fullab
