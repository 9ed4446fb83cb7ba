#include "fullab/rotation.hpp"

#include <algorithm>
#include <unordered_set>

namespace fullab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::NonTriangleFace: return "NonTriangleFace";
    case ErrorCode::BadDegreeProfile: return "BadDegreeProfile";
    case ErrorCode::N22Forbidden: return "N22Forbidden";
    case ErrorCode::InfeasibleN: return "InfeasibleN";
    case ErrorCode::GluingFailed: return "GluingFailed";
    case ErrorCode::PatchAmbiguous: return "PatchAmbiguous";
    case ErrorCode::NoSpiralExists: return "NoSpiralExists";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::WindupFailed: return "WindupFailed";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::SpiralStuck: return "SpiralStuck";
    case ErrorCode::NoValidPath: return "NoValidPath";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TruncatedRecord: return "TruncatedRecord";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

RotationSystem RotationSystem::from_lists(std::vector<std::vector<int>> rot) {
  const int m = static_cast<int>(rot.size());
  if (m == 0) throw Error(ErrorCode::EmptyInput, "no vertices");
  long edges2 = 0;
  for (int v = 0; v < m; ++v) {
    if (rot[v].empty())
      throw Error(ErrorCode::NotSymmetric, "isolated vertex " + std::to_string(v));
    std::unordered_set<int> seen;
    for (int u : rot[v]) {
      if (u < 0 || u >= m)
        throw Error(ErrorCode::OutOfRange, "neighbour id " + std::to_string(u));
      if (u == v)
        throw Error(ErrorCode::NotSymmetric, "loop at " + std::to_string(v));
      if (!seen.insert(u).second)
        throw Error(ErrorCode::MultiEdge,
                    "repeated neighbour " + std::to_string(u) + " at " + std::to_string(v));
    }
    edges2 += static_cast<long>(rot[v].size());
  }
  RotationSystem rs;
  rs.rot_ = std::move(rot);
  for (int v = 0; v < m; ++v)
    for (int u : rs.rot_[v])
      if (rs.index_of(u, v) < 0)
        throw Error(ErrorCode::NotSymmetric,
                    std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");
  rs.edge_count_ = static_cast<int>(edges2 / 2);
  return rs;
}

bool RotationSystem::adjacent(int u, int v) const { return index_of(v, u) >= 0; }

int RotationSystem::index_of(int v, int u) const {
  const auto& nb = rot_[v];
  for (int i = 0; i < static_cast<int>(nb.size()); ++i)
    if (nb[i] == u) return i;
  return -1;
}

std::pair<int, int> RotationSystem::face_next(int u, int v) const {
  int i = index_of(v, u);
  if (i < 0) throw Error(ErrorCode::OutOfRange, "face_next on non-edge");
  const auto& nb = rot_[v];
  return {v, nb[(i + 1) % nb.size()]};
}

std::vector<std::vector<int>> RotationSystem::trace_faces() const {
  const int m = vertex_count();
  // visited[directed edge], indexed by (v, position of the edge's head in rot_[v]).
  std::vector<std::vector<char>> visited(m);
  for (int v = 0; v < m; ++v) visited[v].assign(rot_[v].size(), 0);
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < m; ++v) {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      if (visited[v][i]) continue;
      std::vector<int> face;
      int cu = v, cv = rot_[v][i];
      while (true) {
        int pos = index_of(cu, cv);
        if (visited[cu][pos]) break;
        visited[cu][pos] = 1;
        face.push_back(cu);
        auto [nu, nv] = face_next(cu, cv);
        cu = nu;
        cv = nv;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool RotationSystem::is_sphere() const {
  long f = static_cast<long>(trace_faces().size());
  return vertex_count() - edge_count() + f == 2;
}

RotationSystem RotationSystem::mirror() const {
  RotationSystem rs = *this;
  for (auto& nb : rs.rot_) std::reverse(nb.begin(), nb.end());
  return rs;
}

RotationSystem RotationSystem::relabel(const std::vector<int>& perm) const {
  const int m = vertex_count();
  RotationSystem rs;
  rs.rot_.resize(m);
  rs.edge_count_ = edge_count_;
  for (int v = 0; v < m; ++v) {
    auto& out = rs.rot_[perm[v]];
    out.reserve(rot_[v].size());
    for (int u : rot_[v]) out.push_back(perm[u]);
  }
  return rs;
}

}  // namespace fullab
