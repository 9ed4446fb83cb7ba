#include "fullab/sw_ops.hpp"

#include <algorithm>

#include "fullab/errors.hpp"

namespace fullab {

namespace {

int find_in(const std::vector<int>& l, int w) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == w) return static_cast<int>(i);
  return -1;
}

bool adjacent_in(const std::vector<std::vector<int>>& rot, int a, int b) {
  return find_in(rot[static_cast<std::size_t>(a)], b) >= 0;
}

// mates on raw lists; returns false when (v1,v2) is not an edge
bool mates_raw(const std::vector<std::vector<int>>& rot, int v1, int v2, int& v3, int& v4) {
  const auto& l1 = rot[static_cast<std::size_t>(v1)];
  int p = find_in(l1, v2);
  if (p < 0) return false;
  int d = static_cast<int>(l1.size());
  int a = l1[static_cast<std::size_t>((p + 1) % d)];
  int b = l1[static_cast<std::size_t>((p + d - 1) % d)];
  // v3 sees v1 then v2 consecutively; with ccw rotations that is the mate
  // preceding v2 at v1, but the convention of the input is not assumed:
  // resolve by checking.
  auto order_ok = [&](int x) {
    const auto& lx = rot[static_cast<std::size_t>(x)];
    int q = find_in(lx, v1);
    return q >= 0 && lx[static_cast<std::size_t>((q + 1) % lx.size())] == v2;
  };
  if (order_ok(a)) {
    v3 = a;
    v4 = b;
  } else if (order_ok(b)) {
    v3 = b;
    v4 = a;
  } else {
    return false;  // not two triangles; not a triangulation edge
  }
  return true;
}

}  // namespace

std::pair<int, int> edge_mates(const RotationSystem& rs, int v1, int v2) {
  int v3, v4;
  if (!mates_raw(rs.lists(), v1, v2, v3, v4))
    throw Error(ErrorCode::OutOfRange, "edge_mates: not a triangulation edge");
  return {v3, v4};
}

FlipStatus psw_flip_inplace(std::vector<std::vector<int>>& rot, int v1, int v2) {
  if (v1 < 0 || v2 < 0 || v1 >= static_cast<int>(rot.size()) || v2 >= static_cast<int>(rot.size()))
    return FlipStatus::NotAnEdge;
  int v3, v4;
  if (!mates_raw(rot, v1, v2, v3, v4)) return FlipStatus::NotAnEdge;
  if (v3 == v4 || adjacent_in(rot, v3, v4)) return FlipStatus::MultiEdge;
  if (rot[static_cast<std::size_t>(v1)].size() < 4 || rot[static_cast<std::size_t>(v2)].size() < 4)
    return FlipStatus::DegreeUnderflow;

  auto& l1 = rot[static_cast<std::size_t>(v1)];
  auto& l2 = rot[static_cast<std::size_t>(v2)];
  l1.erase(l1.begin() + find_in(l1, v2));
  l2.erase(l2.begin() + find_in(l2, v1));
  // v3 reads ...,v1,v2,...: the cross edge lands between them. v4 reads
  // ...,v2,v1,... symmetrically.
  auto& l3 = rot[static_cast<std::size_t>(v3)];
  l3.insert(l3.begin() + find_in(l3, v1) + 1, v4);
  auto& l4 = rot[static_cast<std::size_t>(v4)];
  l4.insert(l4.begin() + find_in(l4, v2) + 1, v3);
  return FlipStatus::Ok;
}

Triangulation psw_flip(const Triangulation& t, int v1, int v2) {
  auto rot = t.rot().lists();
  switch (psw_flip_inplace(rot, v1, v2)) {
    case FlipStatus::Ok:
      break;
    case FlipStatus::NotAnEdge:
      throw Error(ErrorCode::OutOfRange, "psw_flip: not an edge");
    case FlipStatus::MultiEdge:
      throw Error(ErrorCode::MultiEdge, "psw_flip: cross edge already present");
    case FlipStatus::DegreeUnderflow:
      throw Error(ErrorCode::DegreeUnderflow, "psw_flip: endpoint degree would drop below 3");
  }
  return Triangulation::build(RotationSystem::from_lists(rot));
}

std::vector<std::pair<int, int>> classic_sw_sites(const DualFullerene& g) {
  const auto& rot = g.rot();
  std::vector<std::pair<int, int>> out;
  for (int v1 = 0; v1 < g.m(); ++v1) {
    if (rot.degree(v1) != 6) continue;
    for (int v2 : rot.neighbors(v1)) {
      if (v2 < v1 || rot.degree(v2) != 6) continue;
      auto [v3, v4] = edge_mates(rot, v1, v2);
      if (rot.degree(v3) != 5 || rot.degree(v4) != 5) continue;
      if (rot.adjacent(v3, v4)) continue;  // flip would double an edge
      out.emplace_back(v1, v2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct GswSearch {
  const RotationSystem* rs = nullptr;
  int m = 0, max_len = 0;
  bool dedup = false, stop_on_first = false, found = false;
  std::vector<char> on_path;
  std::vector<int> path;
  std::vector<GswPath>* out = nullptr;

  void record() {
    found = true;
    if (stop_on_first) return;
    if (dedup) {
      for (std::size_t i = 0, j = path.size() - 1; i < j; ++i, --j) {
        if (path[j] < path[i]) return;  // reversal is smaller, keep that one
        if (path[i] < path[j]) break;
      }
    }
    out->push_back(GswPath{path});
  }

  void extend() {
    int last = path.back();
    int prev = path[path.size() - 2];
    int L = static_cast<int>(path.size());
    if (L >= 4 && L % 2 == 0 && rs->degree(prev) == 6 && rs->degree(last) == 5) record();
    if (found && stop_on_first) return;
    if (L >= max_len) return;
    // candidates: unvisited common neighbors of the last two vertices, in
    // ascending order for determinism
    std::vector<int> cands;
    for (int w : rs->neighbors(last))
      if (!on_path[static_cast<std::size_t>(w)] && rs->adjacent(prev, w)) cands.push_back(w);
    std::sort(cands.begin(), cands.end());
    for (int w : cands) {
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
      if (found && stop_on_first) return;
    }
  }

  void run(const DualFullerene& g) {
    rs = &g.rot();
    m = g.m();
    if (max_len <= 0 || max_len > m) max_len = m;
    on_path.assign(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
      if (rs->degree(a) != 5) continue;
      for (int b : rs->neighbors(a)) {
        if (rs->degree(b) != 6) continue;
        on_path[static_cast<std::size_t>(a)] = 1;
        on_path[static_cast<std::size_t>(b)] = 1;
        path = {a, b};
        extend();
        on_path[static_cast<std::size_t>(a)] = 0;
        on_path[static_cast<std::size_t>(b)] = 0;
        if (found && stop_on_first) return;
      }
    }
  }
};

}  // namespace

std::vector<GswPath> find_gsw_paths(const DualFullerene& g, int max_w, bool dedup_reversal) {
  std::vector<GswPath> out;
  GswSearch s;
  s.max_len = max_w > 0 ? 2 * max_w : 0;
  s.dedup = dedup_reversal;
  s.out = &out;
  s.run(g);
  return out;
}

bool has_gsw_path(const DualFullerene& g) {
  std::vector<GswPath> out;
  GswSearch s;
  s.stop_on_first = true;
  s.out = &out;
  s.run(g);
  return s.found;
}

namespace {

void check_path_shape(const DualFullerene& g, const std::vector<int>& v) {
  const auto& rs = g.rot();
  const int L = static_cast<int>(v.size());
  if (L < 4 || L % 2 != 0) throw Error(ErrorCode::InvalidPath, "path length must be even, >= 4");
  std::vector<char> seen(static_cast<std::size_t>(g.m()), 0);
  for (int x : v) {
    if (x < 0 || x >= g.m() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::InvalidPath, "path vertices must be distinct");
    seen[static_cast<std::size_t>(x)] = 1;
  }
  for (int i = 0; i + 1 < L; ++i)
    if (!rs.adjacent(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]))
      throw Error(ErrorCode::InvalidPath, "consecutive path vertices must be adjacent");
  for (int i = 0; i + 2 < L; ++i)
    if (!rs.adjacent(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 2)]))
      throw Error(ErrorCode::InvalidPath, "path must have all short chords");
  if (rs.degree(v[0]) != 5 || rs.degree(v[static_cast<std::size_t>(L - 1)]) != 5 ||
      rs.degree(v[1]) != 6 || rs.degree(v[static_cast<std::size_t>(L - 2)]) != 6)
    throw Error(ErrorCode::InvalidPath, "path end degrees must be 5,6 ... 6,5");
}

}  // namespace

DualFullerene apply_gsw(const DualFullerene& g, const GswPath& path) {
  check_path_shape(g, path.v);
  auto rot = g.rot().lists();
  const auto& v = path.v;
  const int w = static_cast<int>(v.size()) / 2;
  for (int i = 1; i < w; ++i) {
    // 1-based description: flip i removes edge (v_2i, v_2i+1) whose mates
    // must currently be v_2i-1 and v_2i+2
    int a = v[static_cast<std::size_t>(2 * i - 2)], b = v[static_cast<std::size_t>(2 * i - 1)];
    int c = v[static_cast<std::size_t>(2 * i)], d = v[static_cast<std::size_t>(2 * i + 1)];
    int m1, m2;
    if (!mates_raw(rot, b, c, m1, m2)) throw Error(ErrorCode::InvalidPath, "ladder edge vanished");
    if (!((m1 == a && m2 == d) || (m1 == d && m2 == a)))
      throw Error(ErrorCode::InvalidPath, "ladder rung has wrong mates");
    FlipStatus st = psw_flip_inplace(rot, b, c);
    if (st != FlipStatus::Ok) throw Error(ErrorCode::InvalidPath, "ladder flip refused");
  }
  return DualFullerene::build(RotationSystem::from_lists(rot));
}

}  // namespace fullab
