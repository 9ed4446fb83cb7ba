#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fullab/spiral.hpp"
#include "fullab/triangulation.hpp"

namespace fullab {

// Counter-style seedable generator (splitmix64). Small, fast, and the whole
// sampling pipeline is reproducible from the single 64-bit seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // exact uniform draw from [0, bound) by rejection
  std::uint64_t below(std::uint64_t bound);

  double unit();  // [0, 1)
};

// Stream seed for a numbered worker, so parallel runs stay reproducible.
std::uint64_t stream_seed(std::uint64_t seed, int worker);

struct SampleReport {
  std::uint64_t attempted = 0;
  std::uint64_t accepted = 0;
  double acceptance_rate = 0.0;
  // spiral sampler: accepted draws per isomer; chain: visited fullerene
  // steps per isomer. Keys are canonical pentagon vectors.
  std::map<PentagonVector, std::uint64_t> counts;
};

// One exact-uniform draw from the isomorphism classes of C_n: draw a uniform
// rank below C(m,12), unrank, wind up, and accept only the canonical vector
// of its own graph. Every class has exactly one accepted vector, hence
// uniformity. Loops until acceptance; attempts accumulates draws.
DualFullerene spiral_ar_sample(int n, SplitMix64& rng, std::uint64_t& attempts);

struct SampleRun {
  SampleReport report;
  std::vector<PentagonVector> samples;  // canonical, in draw order
};

SampleRun spiral_ar_run(int n, int count, std::uint64_t seed);

enum class FlipPolicy { UniformFlip, Energy };

// sum over vertices of (d-5)(d-6): zero exactly on fullerene degree profiles
double degree_energy(const std::vector<int>& degrees);

struct ChainConfig {
  int n = 20;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::int64_t burn_in = 0;
  FlipPolicy policy = FlipPolicy::UniformFlip;
  // optional replacement for degree_energy under FlipPolicy::Energy
  std::function<double(const std::vector<int>&)> energy;
  double temperature = 1.0;
  std::int64_t validate_every = 10000;  // full structural re-check period
};

struct ChainResult {
  SampleReport report;               // counts: post-burn-in visits per isomer
  std::uint64_t profile_steps = 0;   // post-burn-in steps with a fullerene profile
  std::vector<std::vector<int>> final_state;  // rotation lists after the run
};

// Edge-flip random walk over triangulations on m = n/2+2 vertices, started
// at the bipyramid. Each step proposes a uniformly random edge; an illegal
// flip leaves the state unchanged but still counts. The energy policy runs
// a unit-temperature Metropolis test on top of the proposal.
ChainResult psw_chain(const ChainConfig& cfg);

struct UniformityReport {
  int n = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;  // per isomer, in enumeration order
  double chi_square = 0.0;
  double p_value = 1.0;
};

// Empirical distribution of samples over the enumerated classes of C_n plus
// a chi-square test against the uniform distribution.
UniformityReport uniformity_report(const std::vector<PentagonVector>& samples, int n,
                                   int threads = 1,
                                   std::uint64_t budget = default_attempt_budget());

// Survival function of the chi-square distribution (regularized upper
// incomplete gamma). dof = 0 returns 1.
double chi_square_p_value(double chi2, int dof);

}  // namespace fullab
