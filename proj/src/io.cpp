#include "fullab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fullab/errors.hpp"

namespace fullab {

const char kPlanarCodeHeader[] = ">>planar_code<<";

namespace {

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream f(path, mode);
  if (!f) throw std::runtime_error("cannot open " + path + " for reading");
  return f;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

}  // namespace

void write_planar_code(std::ostream& out, const std::vector<RotationSystem>& graphs) {
  out.write(kPlanarCodeHeader, 15);
  for (const RotationSystem& rs : graphs) {
    const int m = rs.vertex_count();
    if (m < 1 || m > 255)
      throw Error(ErrorCode::OutOfRange, "planar code carries at most 255 vertices");
    out.put((char)(unsigned char)m);
    for (int v = 0; v < m; ++v) {
      for (int u : rs.neighbors(v)) out.put((char)(unsigned char)(u + 1));
      out.put(0);
    }
  }
  if (!out) throw std::runtime_error("planar code write failed");
}

void write_planar_code_file(const std::string& path, const std::vector<RotationSystem>& graphs) {
  auto f = open_out(path, std::ios::out | std::ios::binary);
  write_planar_code(f, graphs);
}

std::vector<RotationSystem> read_planar_code(std::istream& in, ReadMode mode) {
  char header[15];
  in.read(header, 15);
  if (in.gcount() != 15 || !std::equal(header, header + 15, kPlanarCodeHeader))
    throw Error(ErrorCode::BadHeader, "missing \">>planar_code<<\" header");

  std::vector<RotationSystem> out;
  for (;;) {
    const int mb = in.get();
    if (mb == EOF) break;
    const std::size_t record = out.size();
    const auto where = [&] { return " in planar code record " + std::to_string(record); };
    const int m = mb & 0xff;
    if (m == 0) throw Error(ErrorCode::ValidationFailed, "zero vertex count" + where());
    std::vector<std::vector<int>> lists((std::size_t)m);
    for (int v = 0; v < m; ++v)
      for (;;) {
        const int b = in.get();
        if (b == EOF) throw Error(ErrorCode::TruncatedRecord, "unexpected end" + where());
        if (b == 0) break;
        if (b > m)
          throw Error(ErrorCode::ValidationFailed, "neighbor out of range" + where());
        lists[(std::size_t)v].push_back(b - 1);
      }
    try {
      RotationSystem rs = RotationSystem::from_lists(lists);
      if (mode == ReadMode::Strict) DualFullerene::build(rs);
      out.push_back(std::move(rs));
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationFailed, std::string(e.what()) + where());
    }
  }
  return out;
}

std::vector<RotationSystem> read_planar_code_file(const std::string& path, ReadMode mode) {
  auto f = open_in(path, std::ios::in | std::ios::binary);
  return read_planar_code(f, mode);
}

void write_spiral_lines(std::ostream& out, const std::vector<PentagonVector>& pvs) {
  for (const PentagonVector& pv : pvs) {
    out << 2 * pv.m - 4;
    for (int p : pv.pos) out << ' ' << p;
    out << '\n';
  }
  if (!out) throw std::runtime_error("spiral write failed");
}

std::vector<PentagonVector> read_spiral_lines(std::istream& in) {
  std::vector<PentagonVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto where = [&] { return " on spiral line " + std::to_string(lineno); };
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    int n;
    if (!(ss >> n)) throw Error(ErrorCode::ValidationFailed, "unreadable vertex count" + where());
    if (n < 20 || n % 2) throw Error(ErrorCode::InfeasibleN, "bad vertex count" + where());
    PentagonVector pv;
    pv.m = n / 2 + 2;
    int prev = 0;
    for (int i = 0; i < 12; ++i) {
      if (!(ss >> pv.pos[i]))
        throw Error(ErrorCode::TruncatedRecord, "expected 12 positions" + where());
      if (pv.pos[i] <= prev || pv.pos[i] > pv.m)
        throw Error(ErrorCode::ValidationFailed, "positions must ascend within 1..m" + where());
      prev = pv.pos[i];
    }
    out.push_back(pv);
  }
  return out;
}

std::vector<PentagonVector> read_spiral_lines_file(const std::string& path) {
  auto f = open_in(path);
  return read_spiral_lines(f);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

IsomerDb IsomerDb::build(int n, int threads, std::uint64_t budget) {
  IsomerDb db;
  db.n = n;
  db.spirals = enumerate_isomers(n, threads, budget).isomers;
  db.codes.reserve(db.spirals.size());
  for (const PentagonVector& pv : db.spirals) db.codes.push_back(canonical_code(windup_graph(pv)));
  return db;
}

void IsomerDb::save(const std::string& path) const {
  auto f = open_out(path);
  write_spiral_lines(f, spirals);
  auto idx = open_out(path + ".idx");
  for (std::size_t i = 0; i < codes.size(); ++i) {
    idx << (i + 1);
    for (std::uint16_t w : codes[i]) idx << ' ' << w;
    idx << '\n';
  }
}

IsomerDb IsomerDb::load(const std::string& path) {
  IsomerDb db;
  db.spirals = read_spiral_lines_file(path);
  db.n = db.spirals.empty() ? 0 : 2 * db.spirals.front().m - 4;
  std::ifstream idx(path + ".idx");
  if (idx) {
    std::string line;
    while (std::getline(idx, line)) {
      std::istringstream ss(line);
      std::size_t j;
      if (!(ss >> j)) continue;
      CanonicalCode code;
      unsigned w;
      while (ss >> w) code.push_back((std::uint16_t)w);
      if (j != db.codes.size() + 1 || code.empty())
        throw Error(ErrorCode::ValidationFailed, "index line out of order in " + path + ".idx");
      db.codes.push_back(std::move(code));
    }
  } else {
    for (const PentagonVector& pv : db.spirals)
      db.codes.push_back(canonical_code(windup_graph(pv)));
  }
  if (db.codes.size() != db.spirals.size())
    throw Error(ErrorCode::ValidationFailed, "spiral file and index disagree for " + path);
  return db;
}

int IsomerDb::lookup(const PentagonVector& pv) const {
  const auto it = std::lower_bound(spirals.begin(), spirals.end(), pv);
  if (it == spirals.end() || !(*it == pv))
    throw Error(ErrorCode::NotFound, "pentagon vector not in the store");
  return (int)(it - spirals.begin()) + 1;
}

int IsomerDb::lookup(const DualFullerene& g) const {
  const CanonicalCode code = canonical_code(g);
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (codes[i] == code) return (int)i + 1;
  throw Error(ErrorCode::NotFound, "graph not in the store");
}

}  // namespace fullab
