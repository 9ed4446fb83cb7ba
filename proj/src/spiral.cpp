#include "fullab/spiral.hpp"

#include <algorithm>
#include <cstring>
#include <thread>

#include "fullab/errors.hpp"

namespace fullab {

namespace {

constexpr int kMaxM = 255;

using u128 = unsigned __int128;
using u64 = std::uint64_t;

// C(a,b) for a <= 255, b <= 12. C(255,12) overflows 64 bits, hence the wide
// type.
const u128 (&binom_table())[kMaxM + 1][13] {
  struct Table {
    u128 c[kMaxM + 1][13];
    Table() {
      for (int a = 0; a <= kMaxM; ++a)
        for (int b = 0; b <= 12; ++b) {
          if (b == 0)
            c[a][b] = 1;
          else if (a == 0)
            c[a][b] = 0;
          else
            c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
        }
    }
  };
  static const Table t;
  return t.c;
}

void check_pv(const PentagonVector& pv) {
  if (pv.m < 12 || pv.m > kMaxM)
    throw Error(ErrorCode::OutOfRange, "pentagon vector order out of range");
  int prev = 0;
  for (int p : pv.pos) {
    if (p <= prev || p > pv.m)
      throw Error(ErrorCode::OutOfRange, "pentagon positions must be ascending in [1,m]");
    prev = p;
  }
}

// Flat view of a triangulation for the unwind inner loop: fixed-stride
// neighbor slots, no indirection.
struct SpiralView {
  const int* nbr;  // 6 per vertex
  const int* deg;
  int m;
};

// One unwind from directed edge (u,v) in the given sense, optionally compared
// on the fly against a bound pentagon vector (ascending positions).
// Returns -1 aborted (prefix lexicographically above the bound), 0 stuck,
// 1 completed matching the bound exactly, 2 completed strictly below the
// bound (always 2 when bound is null). pos_out is valid on 1 and 2.
int unwind_run(const SpiralView& g, int u, int v, int sense, const int* bound, int* pos_out,
               u64* vis, int* trace) {
  const int m = g.m;
  const int words = (m + 63) / 64;
  std::memset(vis, 0, sizeof(u64) * static_cast<std::size_t>(words));
  int len = 0, pcnt = 0, bp = 0;
  bool beats = bound == nullptr;

  auto nb = [&](int x, int i) { return g.nbr[6 * x + i]; };
  auto seen = [&](int x) { return (vis[x >> 6] >> (x & 63)) & 1u; };
  auto mark = [&](int x) { vis[x >> 6] |= u64{1} << (x & 63); };
  // push returns false on abort
  auto push = [&](int w) {
    trace[len++] = w;
    mark(w);
    bool five = g.deg[w] == 5;
    if (!beats) {
      bool bound_five = bp < 12 && bound[bp] == len;
      if (bound_five) ++bp;
      if (five != bound_five) {
        if (!five) return false;  // 6 where the bound has 5
        beats = true;
      }
    }
    if (five && pcnt < 12) pos_out[pcnt++] = len;
    return true;
  };

  int dv = g.deg[v], pu = -1;
  for (int i = 0; i < dv; ++i)
    if (nb(v, i) == u) {
      pu = i;
      break;
    }
  if (pu < 0) throw Error(ErrorCode::OutOfRange, "unwind start is not an edge");
  int third = nb(v, ((pu + sense) % dv + dv) % dv);
  if (!push(u) || !push(v) || !push(third)) return -1;

  int f = 0;
  while (len < m) {
    while (f < len) {
      int vf = trace[f], d = g.deg[vf];
      bool open = false;
      for (int i = 0; i < d; ++i)
        if (!seen(nb(vf, i))) {
          open = true;
          break;
        }
      if (open) break;
      ++f;
    }
    if (f == len) return 0;
    int vf = trace[f], last = trace[len - 1];
    int dl = g.deg[last], cand = -1, cc = 0;
    for (int i = 0; i < dl; ++i) {
      int w = nb(last, i);
      if (seen(w)) continue;
      int dvf = g.deg[vf];
      for (int j = 0; j < dvf; ++j)
        if (nb(vf, j) == w) {
          cand = w;
          ++cc;
          break;
        }
    }
    if (cc != 1) return 0;
    if (!push(cand)) return -1;
  }
  return beats ? 2 : 1;
}

// Materialized view plus scratch, for entry points that start from a
// DualFullerene rather than a windup workspace.
struct ViewScratch {
  std::vector<int> nbr, deg, trace;
  std::vector<u64> vis;
  SpiralView view{};

  explicit ViewScratch(const DualFullerene& g) {
    const int m = g.m();
    nbr.assign(static_cast<std::size_t>(6) * m, -1);
    deg.resize(static_cast<std::size_t>(m));
    trace.resize(static_cast<std::size_t>(m));
    vis.resize(static_cast<std::size_t>((m + 63) / 64));
    for (int v = 0; v < m; ++v) {
      const auto& l = g.rot().neighbors(v);
      deg[static_cast<std::size_t>(v)] = static_cast<int>(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) nbr[static_cast<std::size_t>(6 * v) + i] = l[i];
    }
    view = SpiralView{nbr.data(), deg.data(), m};
  }
};

// Lexicographic minimum over all 6n starts. Returns false if every start is
// stuck.
bool canonical_core(const SpiralView& g, u64* vis, int* trace, int* best) {
  int cur[12];
  bool have = false;
  for (int a = 0; a < g.m; ++a)
    for (int i = 0; i < g.deg[a]; ++i)
      for (int s : {1, -1}) {
        int r = unwind_run(g, a, g.nbr[6 * a + i], s, have ? best : nullptr, cur, vis, trace);
        if (r == 2) {
          std::copy(cur, cur + 12, best);
          have = true;
        }
      }
  return have;
}

}  // namespace

const char* windup_status_name(WindupStatus s) {
  switch (s) {
    case WindupStatus::Ok: return "ok";
    case WindupStatus::DegreeOverflow: return "degree overflow";
    case WindupStatus::MultiEdge: return "multi edge";
    case WindupStatus::Degenerate: return "degenerate boundary";
    case WindupStatus::NotClosed: return "not closed";
  }
  return "?";
}

SpiralTrace unwind(const DualFullerene& g, int u, int v, int sense) {
  if (sense != 1 && sense != -1) throw Error(ErrorCode::OutOfRange, "sense must be +1 or -1");
  const int m = g.m();
  if (u < 0 || u >= m || v < 0 || v >= m || !g.rot().adjacent(u, v))
    throw Error(ErrorCode::OutOfRange, "unwind start is not an edge");
  ViewScratch s(g);
  int pos[12];
  int r = unwind_run(s.view, u, v, sense, nullptr, pos, s.vis.data(), s.trace.data());
  SpiralTrace out;
  if (r == 2) {
    out.status = UnwindStatus::Ok;
    out.order.assign(s.trace.begin(), s.trace.end());
    out.pv.m = m;
    std::copy(pos, pos + 12, out.pv.pos.begin());
  }
  return out;
}

PentagonVector canonical_pentagon_vector(const DualFullerene& g) {
  ViewScratch s(g);
  int best[12];
  if (!canonical_core(s.view, s.vis.data(), s.trace.data(), best))
    throw Error(ErrorCode::NoSpiralExists, "no spiral start completes");
  PentagonVector pv;
  pv.m = g.m();
  std::copy(best, best + 12, pv.pos.begin());
  return pv;
}

void WindupWorkspace::resize(int m) {
  if (m < 1 || m > kMaxM) throw Error(ErrorCode::OutOfRange, "workspace order out of range");
  m_ = m;
  words_ = (m + 63) / 64;
  slot_.assign(static_cast<std::size_t>(6) * m, -1);
  head_.assign(static_cast<std::size_t>(m), 0);
  cnt_.assign(static_cast<std::size_t>(m), 0);
  cap_.assign(static_cast<std::size_t>(m), 6);
  bits_.assign(static_cast<std::size_t>(m) * words_, 0);
  bnd_.assign(static_cast<std::size_t>(m), 0);
  vis_.assign(static_cast<std::size_t>(words_), 0);
  trace_.assign(static_cast<std::size_t>(m), 0);
}

std::vector<std::vector<int>> WindupWorkspace::lists() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m_));
  for (int v = 0; v < m_; ++v) {
    out[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(cnt_[static_cast<std::size_t>(v)]));
    for (int i = 0; i < cnt_[static_cast<std::size_t>(v)]; ++i)
      out[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = neighbor(v, i);
  }
  return out;
}

DualFullerene WindupWorkspace::build() const { return DualFullerene::build(lists()); }

WindupStatus windup(const PentagonVector& pv, WindupWorkspace& ws) {
  check_pv(pv);
  const int m = pv.m;
  if (ws.m_ != m) ws.resize(m);
  const int words = ws.words_;
  int* slot = ws.slot_.data();
  int* head = ws.head_.data();
  int* cnt = ws.cnt_.data();
  int* cap = ws.cap_.data();
  u64* bits = ws.bits_.data();
  std::memset(cnt, 0, sizeof(int) * static_cast<std::size_t>(m));
  std::memset(head, 0, sizeof(int) * static_cast<std::size_t>(m));
  std::memset(bits, 0, sizeof(u64) * static_cast<std::size_t>(m) * words);
  for (int v = 0; v < m; ++v) cap[v] = 6;
  for (int p : pv.pos) cap[p - 1] = 5;

  int edges = 0;
  WindupStatus st = WindupStatus::Ok;
  auto test = [&](int a, int b) { return (bits[static_cast<std::size_t>(a) * words + (b >> 6)] >> (b & 63)) & 1u; };
  auto add_edge = [&](int a, int b) {
    if (cnt[a] == cap[a] || cnt[b] == cap[b]) {
      st = WindupStatus::DegreeOverflow;
      return false;
    }
    if (test(a, b)) {
      st = WindupStatus::MultiEdge;
      return false;
    }
    bits[static_cast<std::size_t>(a) * words + (b >> 6)] |= u64{1} << (b & 63);
    bits[static_cast<std::size_t>(b) * words + (a >> 6)] |= u64{1} << (a & 63);
    ++edges;
    return true;
  };
  // Rotations grow as per-vertex deques in 6 circular slots. Convention:
  // front end = boundary predecessor, back end = boundary successor.
  auto append = [&](int v, int w) { slot[6 * v + (head[v] + cnt[v]++) % 6] = w; };
  auto prepend = [&](int v, int w) {
    head[v] = (head[v] + 5) % 6;
    slot[6 * v + head[v]] = w;
    ++cnt[v];
  };

  int* bnd = ws.bnd_.data();
  int bh = 0, bs = 0;
  auto bfront = [&] { return bnd[bh]; };
  auto bback = [&] { return bnd[(bh + bs - 1) % m]; };

  bnd[bh + bs++] = 0;
  if (!add_edge(0, 1)) return st;
  append(0, 1);
  append(1, 0);
  bnd[(bh + bs++) % m] = 1;

  for (int k = 2; k < m; ++k) {
    if (bs < 2) return WindupStatus::Degenerate;
    int t = bback(), f = bfront();
    if (!add_edge(k, t)) return st;
    append(k, t);
    append(t, k);
    if (!add_edge(k, f)) return st;
    append(k, f);
    prepend(f, k);
    // The new vertex closes the seam triangle (t,f,k), then zips along both
    // boundary ends while they saturate. The adjacency break stops the zip
    // when it wraps onto the other side near closure.
    while (bs > 0 && cnt[bfront()] == cap[bfront()]) {
      bh = (bh + 1) % m;
      --bs;
      if (bs == 0) break;
      int fn = bfront();
      if (test(k, fn)) break;
      if (!add_edge(k, fn)) return st;
      append(k, fn);
      prepend(fn, k);
    }
    while (bs > 0 && cnt[bback()] == cap[bback()]) {
      --bs;
      if (bs == 0) break;
      int tb = bback();
      if (test(k, tb)) break;
      if (!add_edge(k, tb)) return st;
      prepend(k, tb);
      append(tb, k);
    }
    if (cnt[k] < cap[k])
      bnd[(bh + bs++) % m] = k;
    else if (k != m - 1)
      return WindupStatus::Degenerate;
  }
  if (bs != 0 || edges != 3 * m - 6) return WindupStatus::NotClosed;
  for (int v = 0; v < m; ++v)
    if (cnt[v] != cap[v]) return WindupStatus::NotClosed;
  // Normalize deques to plain arrays, then check every rotation corner spans
  // an edge. Together with the saturation and count checks this certifies a
  // triangulated sphere.
  for (int v = 0; v < m; ++v) {
    int d = cnt[v], h = head[v];
    if (h) {
      int tmp[6];
      for (int i = 0; i < d; ++i) tmp[i] = slot[6 * v + (h + i) % 6];
      for (int i = 0; i < d; ++i) slot[6 * v + i] = tmp[i];
      head[v] = 0;
    }
    for (int i = 0; i < d; ++i)
      if (!test(slot[6 * v + i], slot[6 * v + (i + 1) % d])) return WindupStatus::NotClosed;
  }
  return WindupStatus::Ok;
}

DualFullerene windup_graph(const PentagonVector& pv) {
  WindupWorkspace ws(pv.m);
  WindupStatus st = windup(pv, ws);
  if (st != WindupStatus::Ok)
    throw Error(ErrorCode::WindupFailed, std::string("windup failed: ") + windup_status_name(st));
  return ws.build();
}

bool is_canonical_pv(const WindupWorkspace& ws, const PentagonVector& pv) {
  if (ws.m_ != pv.m) throw Error(ErrorCode::OutOfRange, "workspace does not hold this order");
  SpiralView g{ws.slot_.data(), ws.cnt_.data(), ws.m_};
  int bound[12], cur[12];
  std::copy(pv.pos.begin(), pv.pos.end(), bound);
  u64* vis = ws.vis_.data();
  int* trace = ws.trace_.data();
  bool found = false;
  for (int a = 0; a < g.m; ++a)
    for (int i = 0; i < g.deg[a]; ++i)
      for (int s : {1, -1}) {
        int r = unwind_run(g, a, g.nbr[6 * a + i], s, bound, cur, vis, trace);
        if (r == 2) return false;
        if (r == 1) found = true;
      }
  return found;
}

unsigned __int128 pentagon_vector_count(int m) {
  if (m < 0 || m > kMaxM) throw Error(ErrorCode::OutOfRange, "order out of range");
  return binom_table()[m][12];
}

PentagonVector pentagon_vector_from_rank(int m, std::uint64_t rank) {
  const auto& B = binom_table();
  if (m < 12 || m > kMaxM || u128{rank} >= B[m][12])
    throw Error(ErrorCode::OutOfRange, "rank out of range");
  PentagonVector pv;
  pv.m = m;
  u64 r = rank;
  int c = m - 1;
  for (int i = 11; i >= 0; --i) {
    while (B[c][i + 1] > u128{r}) --c;
    pv.pos[static_cast<std::size_t>(i)] = c + 1;
    r -= static_cast<u64>(B[c][i + 1]);
    --c;
  }
  return pv;
}

std::uint64_t pentagon_vector_rank(const PentagonVector& pv) {
  check_pv(pv);
  const auto& B = binom_table();
  u128 r = 0;
  for (int i = 0; i < 12; ++i) r += B[pv.pos[static_cast<std::size_t>(i)] - 1][i + 1];
  if (r > u128{~u64{0}}) throw Error(ErrorCode::OutOfRange, "rank exceeds 64 bits");
  return static_cast<u64>(r);
}

namespace {

void next_colex(PentagonVector& pv) {
  int i = 0;
  while (i < 11 && pv.pos[static_cast<std::size_t>(i)] + 1 == pv.pos[static_cast<std::size_t>(i + 1)]) ++i;
  ++pv.pos[static_cast<std::size_t>(i)];
  for (int j = 0; j < i; ++j) pv.pos[static_cast<std::size_t>(j)] = j + 1;
}

}  // namespace

IsomerList enumerate_isomers(int n, int threads, std::uint64_t budget) {
  if (n < 20 || n % 2 != 0) throw Error(ErrorCode::InfeasibleN, "need even n >= 20");
  const int m = n / 2 + 2;
  u128 total128 = pentagon_vector_count(m);
  if (total128 > u128{budget})
    throw Error(ErrorCode::BudgetExceeded, "C(m,12) exceeds the attempt budget");
  const u64 total = static_cast<u64>(total128);

  int W = std::clamp(threads, 1, 64);
  if (static_cast<u64>(W) > total) W = static_cast<int>(total);
  if (W < 1) W = 1;

  std::vector<std::vector<PentagonVector>> found(static_cast<std::size_t>(W));
  auto work = [&](int w) {
    const u64 lo = static_cast<u64>(u128{total} * static_cast<unsigned>(w) / static_cast<unsigned>(W));
    const u64 hi = static_cast<u64>(u128{total} * static_cast<unsigned>(w + 1) / static_cast<unsigned>(W));
    if (lo >= hi) return;
    WindupWorkspace ws(m);
    PentagonVector pv = pentagon_vector_from_rank(m, lo);
    for (u64 r = lo;; ++r) {
      if (windup(pv, ws) == WindupStatus::Ok && is_canonical_pv(ws, pv))
        found[static_cast<std::size_t>(w)].push_back(pv);
      if (r + 1 >= hi) break;
      next_colex(pv);
    }
  };

  std::vector<std::thread> pool;
  for (int w = 1; w < W; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  IsomerList out;
  out.n = n;
  out.attempts = total;
  for (auto& f : found) out.isomers.insert(out.isomers.end(), f.begin(), f.end());
  std::sort(out.isomers.begin(), out.isomers.end());
  return out;
}

int isomer_index(const IsomerList& list, const PentagonVector& pv) {
  auto it = std::lower_bound(list.isomers.begin(), list.isomers.end(), pv);
  if (it == list.isomers.end() || !(*it == pv))
    throw Error(ErrorCode::NotFound, "pentagon vector not in the isomer list");
  return static_cast<int>(it - list.isomers.begin()) + 1;
}

int isomer_index(const IsomerList& list, const DualFullerene& g) {
  return isomer_index(list, canonical_pentagon_vector(g));
}

}  // namespace fullab
