#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fullab/canonical.hpp"
#include "fullab/spiral.hpp"
#include "fullab/triangulation.hpp"

namespace fullab {

// planar_code: 15-byte ASCII header ">>planar_code<<", then per graph one
// byte m followed by, for each vertex, its neighbors (1-based bytes) in
// rotation order and a 0 terminator. Reading then writing reproduces the
// input byte for byte.
extern const char kPlanarCodeHeader[];

enum class ReadMode {
  Strict,  // every record must validate as a dual fullerene
  Raw      // rotation-system checks only (symmetric, simple)
};

void write_planar_code(std::ostream& out, const std::vector<RotationSystem>& graphs);
void write_planar_code_file(const std::string& path, const std::vector<RotationSystem>& graphs);

std::vector<RotationSystem> read_planar_code(std::istream& in, ReadMode mode = ReadMode::Strict);
std::vector<RotationSystem> read_planar_code_file(const std::string& path,
                                                  ReadMode mode = ReadMode::Strict);

// Spiral text: one line per graph, "n p1 ... p12" with 1-based pentagon
// positions. Blank lines and lines starting with '#' are skipped.
void write_spiral_lines(std::ostream& out, const std::vector<PentagonVector>& pvs);
std::vector<PentagonVector> read_spiral_lines(std::istream& in);
std::vector<PentagonVector> read_spiral_lines_file(const std::string& path);

// Shortest decimal that round-trips (printf %.17g trimmed is overkill; 17
// significant digits keep cross-language reads exact).
std::string format_double(double x);

// Sorted per-n store of canonical spirals with a canonical-code index, so
// lookups work from either a pentagon vector or a whole graph.
struct IsomerDb {
  int n = 0;
  std::vector<PentagonVector> spirals;  // ascending
  std::vector<CanonicalCode> codes;     // parallel to spirals

  static IsomerDb build(int n, int threads = 1,
                        std::uint64_t budget = default_attempt_budget());
  static IsomerDb load(const std::string& path);
  void save(const std::string& path) const;  // writes path and path+".idx"

  int lookup(const PentagonVector& pv) const;  // 1-based isomer index, throws NotFound
  int lookup(const DualFullerene& g) const;
};

}  // namespace fullab
