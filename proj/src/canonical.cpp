#include "fullab/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "fullab/errors.hpp"

namespace fullab {

namespace {

// One BFS code emission. Vertices are labeled in discovery order starting
// from the root a (label 1) and its reference b. Every later vertex uses its
// discovering parent as reference. Each vertex emits the labels of its
// neighbors in rotation order (sense s = +1 or -1), starting at the
// reference, then a 0 separator, then (corner variant only) its corner bits.
//
// Returns true if the generated code is <= *best so far (or best is empty),
// aborting early once the prefix exceeds best. On a completed run, out holds
// the full code.
struct CodeGen {
  const std::vector<std::vector<int>>* rot = nullptr;
  const std::vector<std::vector<char>>* bits = nullptr;  // null: plain code
  std::vector<std::uint16_t> label;
  std::vector<int> order;
  std::vector<int> ref;
  std::vector<std::uint16_t> out;

  void reset(std::size_t m) {
    label.assign(m, 0);
    order.clear();
    ref.assign(m, -1);
    out.clear();
  }

  static int idx_of(const std::vector<int>& nb, int w) {
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (nb[i] == w) return static_cast<int>(i);
    throw Error(ErrorCode::OutOfRange, "reference vertex not in rotation");
  }

  bool run(int a, int b, int s, const std::vector<std::uint16_t>& best) {
    const auto& r = *rot;
    reset(r.size());
    std::uint16_t next = 1;
    label[static_cast<std::size_t>(a)] = next++;
    order.push_back(a);
    ref[static_cast<std::size_t>(a)] = b;
    label[static_cast<std::size_t>(b)] = next++;
    order.push_back(b);
    ref[static_cast<std::size_t>(b)] = a;

    bool tracking = !best.empty();  // still comparing against best
    std::size_t pos = 0;
    auto emit = [&](std::uint16_t sym) {
      if (tracking) {
        if (sym > best[pos]) return false;
        if (sym < best[pos]) tracking = false;
      }
      out.push_back(sym);
      ++pos;
      return true;
    };

    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int u = order[qi];
      const auto& nb = r[static_cast<std::size_t>(u)];
      int d = static_cast<int>(nb.size());
      int p = d > 0 ? idx_of(nb, ref[static_cast<std::size_t>(u)]) : 0;
      for (int k = 0; k < d; ++k) {
        int w = nb[static_cast<std::size_t>(((p + s * k) % d + d) % d)];
        if (label[static_cast<std::size_t>(w)] == 0) {
          label[static_cast<std::size_t>(w)] = next++;
          order.push_back(w);
          ref[static_cast<std::size_t>(w)] = u;
        }
        if (!emit(label[static_cast<std::size_t>(w)])) return false;
      }
      if (!emit(0)) return false;
      if (bits) {
        const auto& bb = (*bits)[static_cast<std::size_t>(u)];
        // Forward sense: corner k sits after neighbor k in the emitted run,
        // i.e. parent corner (p+k) mod d. Reverse sense: the corner after
        // emitted neighbor k is parent corner (p-k-1) mod d.
        for (int k = 0; k < d; ++k) {
          int c = s > 0 ? (p + k) % d : ((p - k - 1) % d + d) % d;
          if (!emit(static_cast<std::uint16_t>(1 + bb[static_cast<std::size_t>(c)])))
            return false;
        }
      }
    }
    if (order.size() != r.size())
      throw Error(ErrorCode::ValidationFailed, "canonical code needs a connected graph");
    return true;
  }
};

CanonicalCode min_code(const std::vector<std::vector<int>>& rot,
                       const std::vector<std::vector<char>>* bits) {
  if (rot.size() == 1) return CanonicalCode{0};  // no edges, no starts
  CodeGen gen;
  gen.rot = &rot;
  gen.bits = bits;
  CanonicalCode best;
  for (std::size_t a = 0; a < rot.size(); ++a)
    for (int b : rot[a])
      for (int s : {1, -1})
        if (gen.run(static_cast<int>(a), b, s, best)) best = gen.out;
  if (best.empty())
    throw Error(ErrorCode::ValidationFailed, "graph has vertices but no edges");
  return best;
}

}  // namespace

CanonicalCode canonical_code(const RotationSystem& rs) {
  return min_code(rs.lists(), nullptr);
}

CanonicalCode canonical_code(const DualFullerene& g) { return canonical_code(g.rot()); }

bool is_isomorphic(const RotationSystem& a, const RotationSystem& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

bool is_isomorphic(const DualFullerene& a, const DualFullerene& b) {
  return is_isomorphic(a.rot(), b.rot());
}

CanonicalCode canonical_corner_code(const std::vector<std::vector<int>>& rot,
                                    const std::vector<std::vector<char>>& corner_big) {
  if (rot.size() != corner_big.size())
    throw Error(ErrorCode::OutOfRange, "rotation/corner size mismatch");
  for (std::size_t v = 0; v < rot.size(); ++v)
    if (rot[v].size() != corner_big[v].size())
      throw Error(ErrorCode::OutOfRange, "corner bits must match degree");
  return min_code(rot, &corner_big);
}

}  // namespace fullab
