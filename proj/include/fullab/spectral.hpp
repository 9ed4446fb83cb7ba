#pragma once

#include <cstdint>
#include <vector>

#include "fullab/matrix.hpp"
#include "fullab/spiral.hpp"
#include "fullab/triangulation.hpp"

namespace fullab {

// Full spectrum of a symmetric matrix, sorted descending. Householder
// tridiagonalization + implicit-shift QL, no external solver. Throws
// NotSymmetric when max |a_ij - a_ji| exceeds 1e-12 times the matrix scale.
std::vector<double> sym_eigenvalues(const SymMatrix& M);

// tr(M^k) = sum of lambda^k. For matrices with integer entries the result is
// snapped to the nearest integer; a residual above 1e-6 throws.
double newton(const SymMatrix& M, int k);

// Which graph carries the matrix: the dual triangulation itself, its
// hexagon-only or pentagon-only subgraph, or the primal cubic graph.
enum class Representation { Dual, Hex, Pent, Primal };

// alpha*A + beta*D of the chosen representation of g.
SymMatrix character_matrix(const DualFullerene& g, double alpha, double beta,
                           Representation rep = Representation::Dual);

// ch_{alpha,beta} = tr(exp(alpha*A + beta*D)) = sum of e^{alpha*lambda_j}
// over the spectrum of A + (beta/alpha)D. alpha = 0 degenerates to
// sum of e^{beta*deg_i}. An empty representation graph gives 0.
double character(const DualFullerene& g, double alpha = 0.5, double beta = 0.25,
                 Representation rep = Representation::Dual);

// Truncated-series evaluation of tr(exp(P)), for cross-checking the
// eigenvalue route. terms = number of powers of P summed.
double trace_exp_series(const SymMatrix& P, int terms = 60);

// (2/(n+4)) * tr((A + D/2)^k) on the dual representation.
double normalized_newton(const DualFullerene& g, int k);

struct SpectralSummary {
  double alpha = 0.5, beta = 0.25;
  std::vector<double> eigenvalues;  // of A + (beta/alpha)D, or of beta*D when alpha = 0
  double character = 0.0;
};

SpectralSummary spectral_summary(const DualFullerene& g, double alpha = 0.5, double beta = 0.25,
                                 Representation rep = Representation::Dual);

// (value - lo) / (hi - lo); a value outside [lo, hi] or an empty interval
// throws OutOfRange rather than clamping.
double normalized_character(double value, double lo, double hi);
double normalized_character(const DualFullerene& g, double lo, double hi, double alpha = 0.5,
                            double beta = 0.25, Representation rep = Representation::Dual);

struct CharacterRange {
  int n = 0;
  double min = 0.0, max = 0.0;
  PentagonVector argmin, argmax;
  int argmin_index = -1, argmax_index = -1;  // positions in the sorted isomer list
  // range overlap against the neighboring isomer classes, when they exist
  bool has_prev = false, overlaps_prev = false;
  bool has_next = false, overlaps_next = false;
};

// Extremes of the character over all isomers of C_n, plus overlap flags
// against C_{n-2} and C_{n+2} (skipped when empty or below 20).
CharacterRange character_range(int n, double alpha = 0.5, double beta = 0.25, int threads = 1,
                               std::uint64_t budget = default_attempt_budget());

// Equal-width histogram of values over [lo, hi], normalized so the densities
// integrate to 1. Values are clamped into the edge bins; hi itself lands in
// the last bin.
std::vector<double> histogram(const std::vector<double>& values, int bins, double lo, double hi);

}  // namespace fullab
