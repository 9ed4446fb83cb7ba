#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fullab/triangulation.hpp"

namespace fullab {

// Positions (1-based) of the twelve degree-5 vertices in a spiral ordering of
// a dual fullerene on m vertices. Strictly ascending. Lexicographic order on
// pos is the order used everywhere (m is fixed per context).
struct PentagonVector {
  int m = 0;
  std::array<int, 12> pos{};

  friend bool operator==(const PentagonVector& a, const PentagonVector& b) {
    return a.m == b.m && a.pos == b.pos;
  }
  friend bool operator<(const PentagonVector& a, const PentagonVector& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.pos < b.pos;
  }
};

// Reads a spiral order off the graph starting with directed edge (u,v) and
// continuing with the rotation neighbor of u at v in the given sense (+1 or
// -1). Each further vertex must be the unique unvisited common neighbor of
// the spiral head and the earliest still-open vertex; two candidates or zero
// means the start is stuck.
enum class UnwindStatus { Ok, Stuck };

struct SpiralTrace {
  UnwindStatus status = UnwindStatus::Stuck;
  std::vector<int> order;  // full vertex order when Ok
  PentagonVector pv{};     // valid when Ok
};

SpiralTrace unwind(const DualFullerene& g, int u, int v, int sense);

// Lexicographically smallest pentagon vector over all 6n starts. Throws
// Error(NoSpiralExists) when every start is stuck.
PentagonVector canonical_pentagon_vector(const DualFullerene& g);

enum class WindupStatus { Ok, DegreeOverflow, MultiEdge, Degenerate, NotClosed };

const char* windup_status_name(WindupStatus s);

// Rebuilds a triangulation from a pentagon vector by the inverse spiral
// construction. All state lives in a reusable workspace so the enumeration
// and sampling loops do not allocate per attempt.
class WindupWorkspace {
 public:
  WindupWorkspace() = default;
  explicit WindupWorkspace(int m) { resize(m); }
  void resize(int m);
  int m() const { return m_; }

  // Valid after windup() returned Ok.
  int degree(int v) const { return cnt_[static_cast<std::size_t>(v)]; }
  int neighbor(int v, int i) const { return slot_[static_cast<std::size_t>(6 * v + i)]; }
  std::vector<std::vector<int>> lists() const;
  DualFullerene build() const;  // full validation

 private:
  friend WindupStatus windup(const PentagonVector& pv, WindupWorkspace& ws);
  friend bool is_canonical_pv(const WindupWorkspace& ws, const PentagonVector& pv);

  int m_ = 0;
  int words_ = 0;
  std::vector<int> slot_;              // 6 per vertex, circular via head_ during build
  std::vector<int> head_, cnt_, cap_;  // per vertex
  std::vector<std::uint64_t> bits_;    // adjacency, words_ per vertex
  std::vector<int> bnd_;                    // boundary ring buffer
  mutable std::vector<std::uint64_t> vis_;  // unwind scratch
  mutable std::vector<int> trace_;          // unwind scratch
};

WindupStatus windup(const PentagonVector& pv, WindupWorkspace& ws);

// Convenience wrapper, throws on failure with the specific error code.
DualFullerene windup_graph(const PentagonVector& pv);

// True iff pv is the canonical pentagon vector of the graph sitting in ws
// (which must hold a successful windup of pv). Prunes against pv while
// scanning starts, so rejects are cheap. This is the accept test of the
// rejection sampler and the dedup test of the enumerator.
bool is_canonical_pv(const WindupWorkspace& ws, const PentagonVector& pv);

// C(m,12) and the colex rank <-> pentagon vector bijection over it.
unsigned __int128 pentagon_vector_count(int m);
PentagonVector pentagon_vector_from_rank(int m, std::uint64_t rank);
std::uint64_t pentagon_vector_rank(const PentagonVector& pv);

struct IsomerList {
  int n = 0;
  std::vector<PentagonVector> isomers;  // sorted, one canonical pv per class
  std::uint64_t attempts = 0;           // windup attempts consumed
};

constexpr std::uint64_t default_attempt_budget() { return std::uint64_t{1} << 31; }

// All isomers of the fullerene on n faces: every C(m,12) pentagon vector is
// tried and a class is recorded exactly when the drawn vector is its own
// canonical pentagon vector. Result is independent of the thread count.
IsomerList enumerate_isomers(int n, int threads = 1,
                             std::uint64_t budget = default_attempt_budget());

// 1-based position of the class in the sorted enumeration (the j of C_{n,j}).
int isomer_index(const IsomerList& list, const PentagonVector& pv);
int isomer_index(const IsomerList& list, const DualFullerene& g);

}  // namespace fullab
