#include <map>

#include "fullab/canonical.hpp"
#include "fullab/cut.hpp"
#include "fullab/errors.hpp"

namespace fullab {

namespace {

constexpr int kMaxRows = 12;
constexpr int kMaxPieceSize = (kMaxRows + 1) * (kMaxRows + 2) / 2;

// Triangular grid, rows i = 0..t, j = 0..i. The six neighbor directions in
// ccw order: W, NW, NE, E, SE, SW.
constexpr int DI[6] = {0, -1, -1, 0, 1, 1};
constexpr int DJ[6] = {-1, -1, 0, 1, 1, 0};

// Cuts off ra rows at corner (0,0), rb at (t,0), rc at (t,t). The plain
// triangle is cut = (0,0,0).
CutGraph grid_patch(int t, int ra, int rb, int rc) {
  std::vector<std::vector<int>> id(t + 1);
  auto keep = [&](int i, int j) {
    return i >= 0 && i <= t && j >= 0 && j <= i && i >= ra && i - j <= t - rb && j <= t - rc;
  };
  int count = 0;
  for (int i = 0; i <= t; ++i) {
    id[i].assign(i + 1, -1);
    for (int j = 0; j <= i; ++j)
      if (keep(i, j)) id[i][j] = count++;
  }
  if (count == 0) throw Error(ErrorCode::OutOfRange, "no grid rows survive the truncation");

  CutGraph g;
  g.rot.resize(count);
  g.big.resize(count);
  g.origin.resize(count);
  for (int i = 0; i <= t; ++i)
    for (int j = 0; j <= i; ++j) {
      const int v = id[i][j];
      if (v < 0) continue;
      g.origin[v] = v;
      bool have[6];
      int nkept = 0;
      for (int k = 0; k < 6; ++k) {
        have[k] = keep(i + DI[k], j + DJ[k]);
        nkept += have[k];
      }
      if (nkept == 0) {
        if (count != 1)
          throw Error(ErrorCode::ValidationFailed, "isolated vertex in a multi-vertex patch");
        continue;
      }
      if (nkept == 6) {
        for (int k = 0; k < 6; ++k) g.rot[v].push_back(id[i + DI[k]][j + DJ[k]]);
        g.big[v].assign(6, 0);
        continue;
      }
      // boundary vertex: kept directions must form one contiguous cyclic run
      int start = -1;
      for (int k = 0; k < 6; ++k)
        if (have[k] && !have[(k + 5) % 6]) {
          if (start >= 0)
            throw Error(ErrorCode::ValidationFailed, "kept neighbors split into several runs");
          start = k;
        }
      for (int k = start; k < start + nkept; ++k)
        g.rot[v].push_back(id[i + DI[k % 6]][j + DJ[k % 6]]);
      g.big[v].assign(nkept, 0);
      g.big[v].back() = 1;  // the wrap corner spans the outside
    }
  return g;
}

const std::map<CanonicalCode, ComponentMatch>& match_table(TruncationConvention conv) {
  static const std::map<CanonicalCode, ComponentMatch> rows = [] {
    std::map<CanonicalCode, ComponentMatch> t = {};
    for (int k = 0; k <= kMaxRows; ++k) {
      const CutGraph g = triangle_template(k);
      t.emplace(canonical_corner_code(g.rot, g.big), ComponentMatch{ComponentClass::Triangle, k, {}});
    }
    for (int k = 0; k <= kMaxRows; ++k)
      for (int r1 = 0; r1 < k; ++r1)
        for (int r2 = 0; r2 <= r1 && r1 + r2 <= k - 1; ++r2)
          for (int r3 = 0; r3 <= r2; ++r3) {
            if (r1 == 0 && r2 == 0 && r3 == 0) continue;
            try {
              const CutGraph g = truncated_template(k, {r1, r2, r3}, TruncationConvention::Rows);
              t.emplace(canonical_corner_code(g.rot, g.big),
                        ComponentMatch{ComponentClass::Truncated, k, {r1, r2, r3}});
            } catch (const Error&) {
            }
          }
    return t;
  }();
  static const std::map<CanonicalCode, ComponentMatch> full = [] {
    std::map<CanonicalCode, ComponentMatch> t = {};
    for (int k = 0; k <= kMaxRows; ++k) {
      const CutGraph g = triangle_template(k);
      t.emplace(canonical_corner_code(g.rot, g.big), ComponentMatch{ComponentClass::Triangle, k, {}});
    }
    for (int k = 0; k <= kMaxRows; ++k)
      for (int r1 = 0; r1 <= k - 1; ++r1)
        for (int r2 = 0; r2 <= r1 && r1 + r2 <= k - 1; ++r2)
          for (int r3 = 0; r3 <= r2; ++r3)
            try {
              const CutGraph g = truncated_template(k, {r1, r2, r3}, TruncationConvention::Full);
              t.emplace(canonical_corner_code(g.rot, g.big),
                        ComponentMatch{ComponentClass::Truncated, k, {r1, r2, r3}});
            } catch (const Error&) {
            }
    return t;
  }();
  return conv == TruncationConvention::Rows ? rows : full;
}

}  // namespace

CutGraph triangle_template(int t) {
  if (t < 0 || t > kMaxRows) throw Error(ErrorCode::OutOfRange, "triangle rows out of range");
  return grid_patch(t, 0, 0, 0);
}

CutGraph truncated_template(int t, std::array<int, 3> removed, TruncationConvention conv) {
  if (t < 0 || t > kMaxRows) throw Error(ErrorCode::OutOfRange, "grid rows out of range");
  for (int i = 0; i < 3; ++i) {
    if (removed[i] < 0) throw Error(ErrorCode::OutOfRange, "negative truncation");
    for (int j = i + 1; j < 3; ++j)
      if (removed[i] + removed[j] > t - 1)
        throw Error(ErrorCode::OutOfRange, "truncations overlap");
  }
  const int extra = conv == TruncationConvention::Full ? 1 : 0;
  return grid_patch(t, removed[0] + extra, removed[1] + extra, removed[2] + extra);
}

ComponentMatch classify_component(const CutGraph& piece, TruncationConvention conv) {
  ComponentMatch other;
  if (piece.size() > kMaxPieceSize) return other;
  const auto& table = match_table(conv);
  const auto it = table.find(canonical_corner_code(piece.rot, piece.big));
  return it == table.end() ? other : it->second;
}

}  // namespace fullab
