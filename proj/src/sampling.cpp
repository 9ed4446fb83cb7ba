#include "fullab/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"
#include "fullab/sw_ops.hpp"

namespace fullab {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::OutOfRange, "empty draw range");
  const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next();
    if (x >= rem) return (x - rem) % bound;
  }
}

double SplitMix64::unit() { return (double)(next() >> 11) * 0x1.0p-53; }

std::uint64_t stream_seed(std::uint64_t seed, int worker) {
  SplitMix64 g(seed + 0x632be59bd9b4e019ULL * (std::uint64_t)(worker + 1));
  g.next();
  return g.next();
}

namespace {

void require_feasible(int n) {
  if (n < 20 || n % 2) throw Error(ErrorCode::InfeasibleN, "no fullerene on this vertex count");
  if (n == 22) throw Error(ErrorCode::N22Forbidden, "no fullerene on 22 vertices");
}

PentagonVector ar_draw(int n, SplitMix64& rng, std::uint64_t& attempts, WindupWorkspace& ws) {
  const int m = n / 2 + 2;
  const unsigned __int128 count = pentagon_vector_count(m);
  if (count > (unsigned __int128)~std::uint64_t{0})
    throw Error(ErrorCode::OutOfRange, "pentagon vector space exceeds 64-bit ranks");
  ws.resize(m);
  for (;;) {
    const std::uint64_t rank = rng.below((std::uint64_t)count);
    const PentagonVector pv = pentagon_vector_from_rank(m, rank);
    ++attempts;
    if (windup(pv, ws) != WindupStatus::Ok) continue;
    if (is_canonical_pv(ws, pv)) return pv;
  }
}

}  // namespace

DualFullerene spiral_ar_sample(int n, SplitMix64& rng, std::uint64_t& attempts) {
  require_feasible(n);
  WindupWorkspace ws;
  ar_draw(n, rng, attempts, ws);
  return ws.build();
}

SampleRun spiral_ar_run(int n, int count, std::uint64_t seed) {
  require_feasible(n);
  if (count < 0) throw Error(ErrorCode::OutOfRange, "negative sample count");
  SampleRun run;
  SplitMix64 rng(stream_seed(seed, 0));
  WindupWorkspace ws;
  for (int i = 0; i < count; ++i) {
    const PentagonVector pv = ar_draw(n, rng, run.report.attempted, ws);
    ++run.report.accepted;
    ++run.report.counts[pv];
    run.samples.push_back(pv);
  }
  run.report.acceptance_rate =
      run.report.attempted ? (double)run.report.accepted / (double)run.report.attempted : 0.0;
  return run;
}

double degree_energy(const std::vector<int>& degrees) {
  double e = 0.0;
  for (int d : degrees) e += (double)(d - 5) * (double)(d - 6);
  return e;
}

ChainResult psw_chain(const ChainConfig& cfg) {
  if (cfg.n < 6 || cfg.n % 2) throw Error(ErrorCode::InfeasibleN, "chain needs an even n >= 6");
  if (cfg.burn_in < 0 || cfg.steps <= cfg.burn_in)
    throw Error(ErrorCode::OutOfRange, "need steps > burn_in >= 0");
  const int m = cfg.n / 2 + 2;

  std::vector<std::vector<int>> rot = bipyramid(m).lists();
  std::vector<int> deg(m);
  int fives = 0, off_profile = 0;
  for (int v = 0; v < m; ++v) {
    deg[v] = (int)rot[v].size();
    fives += deg[v] == 5;
    off_profile += deg[v] != 5 && deg[v] != 6;
  }
  auto bump = [&](int v, int delta) {
    fives -= deg[v] == 5;
    off_profile -= deg[v] != 5 && deg[v] != 6;
    deg[v] += delta;
    fives += deg[v] == 5;
    off_profile += deg[v] != 5 && deg[v] != 6;
  };

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < m; ++v)
    for (int u : rot[v])
      if (v < u) edges.emplace_back(v, u);

  auto adjacent = [&](int a, int b) {
    return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end();
  };
  auto pair_energy = [&](int d) { return (double)(d - 5) * (double)(d - 6); };

  SplitMix64 rng(stream_seed(cfg.seed, 0));
  ChainResult out;
  std::uint64_t version = 0, cached_version = ~std::uint64_t{0};
  PentagonVector cached_pv;

  for (std::int64_t s = 0; s < cfg.steps; ++s) {
    const std::size_t ei = (std::size_t)rng.below(edges.size());
    const auto [a, b] = edges[ei];
    const int da = deg[a], db = deg[b];
    bool legal = da >= 4 && db >= 4;
    int v3 = -1, v4 = -1;
    if (legal) {
      int ia = -1;
      for (int i = 0; i < da; ++i)
        if (rot[a][i] == b) ia = i;
      v3 = rot[a][(ia + 1) % da];
      v4 = rot[a][(ia + da - 1) % da];
      legal = !adjacent(v3, v4);
    }
    bool accept = legal;
    if (accept && cfg.policy == FlipPolicy::Energy) {
      double delta;
      if (cfg.energy) {
        std::vector<int> after = deg;
        --after[a];
        --after[b];
        ++after[v3];
        ++after[v4];
        delta = cfg.energy(after) - cfg.energy(deg);
      } else {
        delta = pair_energy(da - 1) - pair_energy(da) + pair_energy(db - 1) - pair_energy(db) +
                pair_energy(deg[v3] + 1) - pair_energy(deg[v3]) + pair_energy(deg[v4] + 1) -
                pair_energy(deg[v4]);
      }
      if (delta > 0.0) accept = rng.unit() < std::exp(-delta / cfg.temperature);
    }
    if (accept) {
      if (psw_flip_inplace(rot, a, b) != FlipStatus::Ok)
        throw Error(ErrorCode::ValidationFailed, "pre-checked flip refused");
      edges[ei] = {std::min(v3, v4), std::max(v3, v4)};
      bump(a, -1);
      bump(b, -1);
      bump(v3, +1);
      bump(v4, +1);
      ++version;
      ++out.report.accepted;
    }

    if (cfg.validate_every > 0 && (s + 1) % cfg.validate_every == 0)
      Triangulation::build(RotationSystem::from_lists(rot));

    if (s >= cfg.burn_in && off_profile == 0 && fives == 12) {
      ++out.profile_steps;
      if (version != cached_version) {
        cached_pv = canonical_pentagon_vector(
            DualFullerene::build(RotationSystem::from_lists(rot)));
        cached_version = version;
      }
      ++out.report.counts[cached_pv];
    }
  }
  out.report.attempted = (std::uint64_t)cfg.steps;
  out.report.acceptance_rate = (double)out.report.accepted / (double)cfg.steps;
  out.final_state = std::move(rot);
  return out;
}

namespace {

// regularized upper incomplete gamma Q(a,x): series below a+1, continued
// fraction (modified Lentz) above
double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw Error(ErrorCode::OutOfRange, "bad incomplete gamma arguments");
  if (x == 0.0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, del = 1.0 / a, sum = del;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -(double)i * ((double)i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

double chi_square_p_value(double chi2, int dof) {
  if (chi2 < 0.0 || dof < 0) throw Error(ErrorCode::OutOfRange, "bad chi-square inputs");
  if (dof == 0) return 1.0;
  return gamma_q(dof / 2.0, chi2 / 2.0);
}

UniformityReport uniformity_report(const std::vector<PentagonVector>& samples, int n, int threads,
                                   std::uint64_t budget) {
  const IsomerList list = enumerate_isomers(n, threads, budget);
  UniformityReport rep;
  rep.n = n;
  rep.counts.assign(list.isomers.size(), 0);
  for (const PentagonVector& pv : samples) {
    const int j = isomer_index(list, pv);  // 1-based, throws NotFound
    ++rep.counts[(std::size_t)(j - 1)];
    ++rep.total;
  }
  const std::size_t k = rep.counts.size();
  if (k > 1 && rep.total > 0) {
    const double expect = (double)rep.total / (double)k;
    for (std::uint64_t c : rep.counts) {
      const double d = (double)c - expect;
      rep.chi_square += d * d / expect;
    }
    rep.p_value = chi_square_p_value(rep.chi_square, (int)k - 1);
  }
  return rep;
}

}  // namespace fullab
