#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"

namespace fullab {

namespace {

// Eisenstein integers x + y*w, w = exp(i*pi/3), w*w = w - 1.
struct Eis {
  long long x = 0, y = 0;
  friend Eis operator+(Eis a, Eis b) { return {a.x + b.x, a.y + b.y}; }
  friend Eis operator-(Eis a, Eis b) { return {a.x - b.x, a.y - b.y}; }
  friend Eis operator*(Eis a, Eis b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
  }
  friend bool operator==(Eis a, Eis b) { return a.x == b.x && a.y == b.y; }
};

Eis eis_conj(Eis a) { return {a.x + a.y, -a.y}; }
long long eis_norm(Eis a) { return a.x * a.x + a.x * a.y + a.y * a.y; }

Eis eis_div(Eis a, Eis b) {
  const long long d = eis_norm(b);
  const Eis num = a * eis_conj(b);
  if (d == 0 || num.x % d != 0 || num.y % d != 0)
    throw Error(ErrorCode::GluingFailed, "goldberg: chart transition is not a lattice map");
  return {num.x / d, num.y / d};
}

struct DisjointSet {
  std::vector<int> up;
  explicit DisjointSet(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// One chart per oriented icosahedron face (A,B,C): A at 0, B at g, C at g*w.
// Barycentric numerators of z (sum T): wa beyond edge BC, wb beyond CA,
// wc beyond AB when negative.
struct Charts {
  int p, q;
  long long T;
  std::vector<std::array<int, 3>> face;
  // transition[f][e]: crossing edge e of face f (0: AB, 1: BC, 2: CA)
  struct Hop {
    int to;
    Eis mul, off;
  };
  std::vector<std::array<Hop, 3>> hop;

  Eis g() const { return {p, q}; }
  Eis corner_pos(int which) const {
    if (which == 0) return {0, 0};
    if (which == 1) return {p, q};
    return {-q, p + q};  // g*w
  }

  void weights(Eis z, long long& wa, long long& wb, long long& wc) const {
    wb = z.x * (p + q) + z.y * q;
    wc = (long long)z.y * p - (long long)z.x * q;
    wa = T - wb - wc;
  }
};

Charts make_charts(int p, int q) {
  Charts ch;
  ch.p = p;
  ch.q = q;
  ch.T = (long long)p * p + (long long)p * q + (long long)q * q;
  const Triangulation icosa = Triangulation::build(icosahedron());
  ch.face = icosa.faces();

  std::map<std::pair<int, int>, int> by_edge;  // directed edge -> face
  for (int f = 0; f < (int)ch.face.size(); ++f)
    for (int e = 0; e < 3; ++e)
      by_edge[{ch.face[f][e], ch.face[f][(e + 1) % 3]}] = f;

  ch.hop.resize(ch.face.size());
  for (int f = 0; f < (int)ch.face.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      const int s = ch.face[f][e], t = ch.face[f][(e + 1) % 3];
      const int fn = by_edge.at({t, s});
      auto pos_in = [&](int fi, int v) {
        for (int k = 0; k < 3; ++k)
          if (ch.face[fi][k] == v) return ch.corner_pos(k);
        throw Error(ErrorCode::GluingFailed, "goldberg: edge endpoint missing from face");
      };
      const Eis q1 = ch.corner_pos(e), q2 = ch.corner_pos((e + 1) % 3);
      const Eis r1 = pos_in(fn, s), r2 = pos_in(fn, t);
      const Eis mul = eis_div(r2 - r1, q2 - q1);
      ch.hop[f][e] = {fn, mul, r1 - mul * q1};
    }
  }
  return ch;
}

}  // namespace

DualFullerene goldberg(int p, int q) {
  if (q < 0 || p < q || p + q < 1)
    throw Error(ErrorCode::OutOfRange, "goldberg: need p >= q >= 0 and p + q >= 1");
  const Charts ch = make_charts(p, q);
  const long long T = ch.T;

  // all lattice points in each chart's closed triangle
  std::map<std::tuple<int, long long, long long>, int> node;
  std::vector<std::pair<int, Eis>> rep;
  for (int f = 0; f < (int)ch.face.size(); ++f)
    for (long long x = -q; x <= p; ++x)
      for (long long y = 0; y <= p + q; ++y) {
        const Eis z{x, y};
        long long wa, wb, wc;
        ch.weights(z, wa, wb, wc);
        if (wa < 0 || wb < 0 || wc < 0) continue;
        node[{f, x, y}] = (int)rep.size();
        rep.push_back({f, z});
      }

  // merge boundary points across the shared icosahedron edges
  DisjointSet ds((int)rep.size());
  for (int i = 0; i < (int)rep.size(); ++i) {
    const int f = rep[i].first;
    const Eis z = rep[i].second;
    long long w[3];
    ch.weights(z, w[0], w[1], w[2]);
    // wc = 0 on edge AB, wa = 0 on BC, wb = 0 on CA
    const int edge_of_zero[3] = {1, 2, 0};
    for (int k = 0; k < 3; ++k) {
      if (w[k] != 0) continue;
      const auto& h = ch.hop[f][edge_of_zero[k]];
      const Eis z2 = h.mul * z + h.off;
      const auto it = node.find({h.to, z2.x, z2.y});
      if (it == node.end())
        throw Error(ErrorCode::GluingFailed, "goldberg: boundary point missing in neighbor chart");
      ds.unite(i, it->second);
    }
  }

  std::vector<int> global(rep.size(), -1);
  int m = 0;
  for (int i = 0; i < (int)rep.size(); ++i)
    if (ds.find(i) == i) global[i] = m++;
  if (m != 10 * T + 2) throw Error(ErrorCode::GluingFailed, "goldberg: wrong merged vertex count");
  auto gid = [&](int i) { return global[ds.find(i)]; };

  // resolve a chart point to its surface vertex, hopping charts while some
  // barycentric weight is negative (worst case walks around one cone)
  auto resolve = [&](int f, Eis z) {
    for (int guard = 0; guard < 32; ++guard) {
      long long w[3];
      ch.weights(z, w[0], w[1], w[2]);
      if (w[0] >= 0 && w[1] >= 0 && w[2] >= 0) {
        const auto it = node.find({f, z.x, z.y});
        if (it == node.end()) break;
        return gid(it->second);
      }
      int k = 0;
      if (w[1] < w[k]) k = 1;
      if (w[2] < w[k]) k = 2;
      const int edge_of_neg[3] = {1, 2, 0};
      const auto& h = ch.hop[f][edge_of_neg[k]];
      z = h.mul * z + h.off;
      f = h.to;
    }
    throw Error(ErrorCode::GluingFailed, "goldberg: lattice step left the surface");
  };

  // ccw unit steps: 1, w, w-1, -1, -w, 1-w
  const Eis delta[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  std::vector<std::vector<int>> rot(m);
  for (int i = 0; i < (int)rep.size(); ++i) {
    const int v = gid(i);
    if (!rot[v].empty()) continue;  // one representative per surface vertex
    std::vector<int> fan;
    for (const Eis& d : delta) fan.push_back(resolve(rep[i].first, rep[i].second + d));
    std::vector<int> out;
    for (int u : fan)
      if (out.empty() || out.back() != u) out.push_back(u);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    rot[v] = out;
  }
  return DualFullerene::build(RotationSystem::from_lists(rot));
}

}  // namespace fullab
