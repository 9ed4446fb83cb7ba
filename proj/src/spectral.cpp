#include "fullab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fullab/errors.hpp"

namespace fullab {

SymMatrix adjacency_matrix(const std::vector<std::vector<int>>& lists) {
  SymMatrix M((int)lists.size());
  for (int v = 0; v < M.n; ++v)
    for (int u : lists[v]) M.at(v, u) = 1.0;
  return M;
}

SymMatrix degree_matrix(const std::vector<std::vector<int>>& lists) {
  SymMatrix M((int)lists.size());
  for (int v = 0; v < M.n; ++v) M.at(v, v) = (double)lists[v].size();
  return M;
}

SymMatrix adjacency_matrix(const RotationSystem& rs) { return adjacency_matrix(rs.lists()); }
SymMatrix degree_matrix(const RotationSystem& rs) { return degree_matrix(rs.lists()); }

SymMatrix combine(const SymMatrix& A, double ca, const SymMatrix& B, double cb) {
  if (A.n != B.n) throw Error(ErrorCode::ValidationFailed, "matrix orders differ");
  SymMatrix M(A.n);
  for (std::size_t i = 0; i < M.a.size(); ++i) M.a[i] = ca * A.a[i] + cb * B.a[i];
  return M;
}

namespace {

std::vector<std::vector<int>> representation_lists(const DualFullerene& g, Representation rep) {
  switch (rep) {
    case Representation::Dual:
      return g.rot().lists();
    case Representation::Hex:
      return g.subgraph(6).rot;
    case Representation::Pent:
      return g.subgraph(5).rot;
    case Representation::Primal:
      return plane_dual(g.rot()).lists();
  }
  throw Error(ErrorCode::OutOfRange, "unknown representation");
}

}  // namespace

SymMatrix character_matrix(const DualFullerene& g, double alpha, double beta, Representation rep) {
  const auto lists = representation_lists(g, rep);
  return combine(adjacency_matrix(lists), alpha, degree_matrix(lists), beta);
}

SpectralSummary spectral_summary(const DualFullerene& g, double alpha, double beta,
                                 Representation rep) {
  SpectralSummary s;
  s.alpha = alpha;
  s.beta = beta;
  const auto lists = representation_lists(g, rep);
  if (lists.empty()) return s;
  if (alpha == 0.0) {
    // tr(exp(beta*D)) only; eigenvalues are beta*deg, already exact
    s.eigenvalues = sym_eigenvalues(combine(adjacency_matrix(lists), 0.0, degree_matrix(lists), beta));
    for (double lam : s.eigenvalues) s.character += std::exp(lam);
    return s;
  }
  const SymMatrix M =
      combine(adjacency_matrix(lists), 1.0, degree_matrix(lists), beta / alpha);
  s.eigenvalues = sym_eigenvalues(M);
  for (double lam : s.eigenvalues) s.character += std::exp(alpha * lam);
  return s;
}

double character(const DualFullerene& g, double alpha, double beta, Representation rep) {
  return spectral_summary(g, alpha, beta, rep).character;
}

double newton(const SymMatrix& M, int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "negative power sum order");
  double s = 0.0;
  for (double lam : sym_eigenvalues(M)) s += std::pow(lam, (double)k);
  bool integral = true;
  for (double x : M.a)
    if (std::abs(x - std::round(x)) > 1e-9) {
      integral = false;
      break;
    }
  if (!integral) return s;
  const double r = std::round(s);
  if (std::abs(s - r) >= 1e-6)
    throw Error(ErrorCode::ValidationFailed, "trace of an integral matrix power is not integral");
  return r;
}

double trace_exp_series(const SymMatrix& P, int terms) {
  const int n = P.n;
  if (n == 0) return 0.0;
  // T_k = P^k / k!, so entries stay bounded and the trace sum converges
  std::vector<double> T(P.a.size(), 0.0), next(P.a.size(), 0.0);
  for (int i = 0; i < n; ++i) T[(std::size_t)i * n + i] = 1.0;
  double total = (double)n;
  for (int k = 1; k <= terms; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) acc += T[(std::size_t)i * n + l] * P.a[(std::size_t)l * n + j];
        next[(std::size_t)i * n + j] = acc / k;
      }
    std::swap(T, next);
    for (int i = 0; i < n; ++i) total += T[(std::size_t)i * n + i];
  }
  return total;
}

double normalized_newton(const DualFullerene& g, int k) {
  const auto lists = g.rot().lists();
  const SymMatrix M = combine(adjacency_matrix(lists), 1.0, degree_matrix(lists), 0.5);
  return 2.0 / (g.n() + 4.0) * newton(M, k);
}

double normalized_character(double value, double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "empty character interval");
  if (value < lo || value > hi)
    throw Error(ErrorCode::OutOfRange, "character outside the given interval");
  return (value - lo) / (hi - lo);
}

double normalized_character(const DualFullerene& g, double lo, double hi, double alpha, double beta,
                            Representation rep) {
  return normalized_character(character(g, alpha, beta, rep), lo, hi);
}

CharacterRange character_range(int n, double alpha, double beta, int threads,
                               std::uint64_t budget) {
  const IsomerList list = enumerate_isomers(n, threads, budget);
  if (list.isomers.empty()) throw Error(ErrorCode::OutOfRange, "no isomers for this n");
  CharacterRange r;
  r.n = n;
  for (int i = 0; i < (int)list.isomers.size(); ++i) {
    const double ch = character(windup_graph(list.isomers[i]), alpha, beta);
    if (r.argmin_index < 0 || ch < r.min) {
      r.min = ch;
      r.argmin = list.isomers[i];
      r.argmin_index = i;
    }
    if (r.argmax_index < 0 || ch > r.max) {
      r.max = ch;
      r.argmax = list.isomers[i];
      r.argmax_index = i;
    }
  }
  auto side_range = [&](int nn, bool& has, double& lo, double& hi) {
    has = false;
    if (nn < 20 || nn == 22 || nn % 2) return;
    const IsomerList side = enumerate_isomers(nn, threads, budget);
    if (side.isomers.empty()) return;
    has = true;
    lo = 0.0;
    hi = 0.0;
    for (int i = 0; i < (int)side.isomers.size(); ++i) {
      const double ch = character(windup_graph(side.isomers[i]), alpha, beta);
      if (i == 0 || ch < lo) lo = ch;
      if (i == 0 || ch > hi) hi = ch;
    }
  };
  double plo = 0, phi = 0, nlo = 0, nhi = 0;
  side_range(n - 2, r.has_prev, plo, phi);
  if (r.has_prev) r.overlaps_prev = r.min <= phi && plo <= r.max;
  side_range(n + 2, r.has_next, nlo, nhi);
  if (r.has_next) r.overlaps_next = r.min <= nhi && nlo <= r.max;
  return r;
}

std::vector<double> histogram(const std::vector<double>& values, int bins, double lo, double hi) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "no values to bin");
  if (bins < 1) throw Error(ErrorCode::OutOfRange, "need at least one bin");
  if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "empty histogram range");
  std::vector<double> density((std::size_t)bins, 0.0);
  const double width = (hi - lo) / bins;
  for (double v : values) {
    int idx = (int)((v - lo) / (hi - lo) * bins);
    idx = std::min(std::max(idx, 0), bins - 1);
    density[(std::size_t)idx] += 1.0;
  }
  const double norm = 1.0 / ((double)values.size() * width);
  for (double& d : density) d *= norm;
  return density;
}

}  // namespace fullab
