#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "fullab/constructions.hpp"
#include "fullab/errors.hpp"
#include "fullab/matrix.hpp"
#include "fullab/spectral.hpp"
#include "fullab/spiral.hpp"

using namespace fullab;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

constexpr double kDodecaCharacter = 88.558435940690359;  // e^(5/4) weighted icosahedral spectrum

}  // namespace

TEST_CASE("adjacency and degree matrices agree across input forms") {
  const RotationSystem rs = bipyramid(6);
  const SymMatrix A1 = adjacency_matrix(rs);
  const SymMatrix A2 = adjacency_matrix(rs.lists());
  CHECK(A1.a == A2.a);
  CHECK(degree_matrix(rs).a == degree_matrix(rs.lists()).a);
  for (int i = 0; i < 6; ++i) {
    CHECK(degree_matrix(rs).at(i, i) == rs.degree(i));
    CHECK(A1.at(i, i) == 0.0);
    for (int j = 0; j < 6; ++j) CHECK(A1.at(i, j) == (rs.adjacent(i, j) ? 1.0 : 0.0));
  }
  const SymMatrix C = combine(A1, 0.5, degree_matrix(rs), 0.25);
  CHECK(C.at(0, 0) == doctest::Approx(0.25 * rs.degree(0)).epsilon(1e-15));
  CHECK(C.at(0, rs.neighbors(0)[0]) == 0.5);
}

TEST_CASE("eigenvalue solver on matrices with known spectra") {
  SymMatrix two(2);
  two.at(0, 1) = two.at(1, 0) = 1.0;
  const auto e2 = sym_eigenvalues(two);
  CHECK(e2[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e2[1] == doctest::Approx(-1.0).epsilon(1e-14));

  SymMatrix diag(3);
  diag.at(0, 0) = -2.0;
  diag.at(1, 1) = 7.0;
  diag.at(2, 2) = 3.0;
  const auto ed = sym_eigenvalues(diag);
  CHECK(ed == std::vector<double>{7.0, 3.0, -2.0});

  CHECK(sym_eigenvalues(SymMatrix(0)).empty());

  SymMatrix bad(2);
  bad.at(0, 1) = 1.0;
  bad.at(1, 0) = 2.0;
  CHECK(code_of([&] { sym_eigenvalues(bad); }) == ErrorCode::NotSymmetric);

  // icosahedron adjacency: 5, sqrt5 x3, -sqrt5 x3, -1 x5
  const auto ei = sym_eigenvalues(adjacency_matrix(icosahedron()));
  REQUIRE(ei.size() == 12);
  const double s5 = std::sqrt(5.0);
  CHECK(ei[0] == doctest::Approx(5.0).epsilon(1e-12));
  for (int i = 1; i <= 3; ++i) CHECK(ei[i] == doctest::Approx(s5).epsilon(1e-12));
  for (int i = 4; i <= 8; ++i) CHECK(ei[i] == doctest::Approx(-1.0).epsilon(1e-12));
  for (int i = 9; i <= 11; ++i) CHECK(ei[i] == doctest::Approx(-s5).epsilon(1e-12));
}

TEST_CASE("power traces count closed walks and snap only integer inputs") {
  const SymMatrix A = adjacency_matrix(icosahedron());
  CHECK(newton(A, 0) == 12.0);
  CHECK(newton(A, 1) == 0.0);
  CHECK(newton(A, 2) == 60.0);   // twice the edges
  CHECK(newton(A, 3) == 120.0);  // six walks per triangle
  CHECK(code_of([&] { newton(A, -1); }) == ErrorCode::OutOfRange);
  // non-integer entries are not snapped
  const SymMatrix scaled = combine(A, 0.3, A, 0.0);
  CHECK(newton(scaled, 2) == doctest::Approx(5.4).epsilon(1e-12));
}

TEST_CASE("dodecahedron character against the closed form") {
  const DualFullerene g = dodecahedron();
  const double s5 = std::sqrt(5.0);
  const double closed = std::exp(1.25) * (std::exp(2.5) + 3 * std::exp(s5 / 2) +
                                          3 * std::exp(-s5 / 2) + 5 * std::exp(-0.5));
  CHECK(character(g) == doctest::Approx(closed).epsilon(1e-13));
  CHECK(character(g) == doctest::Approx(kDodecaCharacter).epsilon(1e-13));

  // representation variants
  CHECK(character(g, 0.5, 0.25, Representation::Hex) == 0.0);  // no hexagons at n = 20
  CHECK(character(g, 0.5, 0.25, Representation::Pent) ==
        doctest::Approx(kDodecaCharacter).epsilon(1e-13));
  CHECK(character(g, 0.5, 0.25, Representation::Primal) ==
        doctest::Approx(60.025593395998179).epsilon(1e-12));

  // alpha = 0 short-circuits to a degree sum: 12 e^{5/4}
  CHECK(character(g, 0.0, 0.25) == doctest::Approx(12 * std::exp(1.25)).epsilon(1e-14));
}

TEST_CASE("series evaluation of the trace exponential tracks the spectrum route") {
  const DualFullerene g = seed_for(24);
  const double pairs[4][2] = {{0.5, 0.25}, {1.0, 0.5}, {0.5, 1.0}, {1.0, 1.0}};
  for (const auto& p : pairs) {
    const double via_eig = character(g, p[0], p[1]);
    const double via_series = trace_exp_series(character_matrix(g, p[0], p[1]));
    CHECK(via_series == doctest::Approx(via_eig).epsilon(1e-10));
  }
  // few terms means a visible truncation error
  const SymMatrix P = character_matrix(g, 1.0, 1.0);
  CHECK(std::abs(trace_exp_series(P, 5) - character(g, 1.0, 1.0)) > 1e-3);
}

TEST_CASE("near-zero exponent weights count the vertices") {
  for (int n : {20, 24, 26, 30}) {
    const DualFullerene g = seed_for(n);
    CHECK(character(g, 1e-8, 1e-8) == doctest::Approx(n / 2 + 2).epsilon(1e-6));
  }
}

TEST_CASE("character is a graph invariant") {
  const DualFullerene g = windup_graph(enumerate_isomers(32).isomers[0]);
  const double base = character(g);
  std::mt19937 gen(2024);
  std::vector<int> perm(g.m());
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(perm.begin(), perm.end(), gen);
    const DualFullerene h = DualFullerene::build(g.rot().relabel(perm));
    CHECK(character(h) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("normalized power traces at the dodecahedron") {
  CHECK(normalized_newton(dodecahedron(), 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normalized_newton(dodecahedron(), 1) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(normalized_newton(dodecahedron(), 2) == doctest::Approx(11.25).epsilon(1e-13));
  CHECK(normalized_newton(dodecahedron(), 3) == doctest::Approx(63.125).epsilon(1e-13));
  CHECK(code_of([] { normalized_newton(dodecahedron(), -1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("eigenvalues stay inside the Gershgorin band") {
  for (const PentagonVector& pv : enumerate_isomers(28).isomers) {
    const SpectralSummary s = spectral_summary(windup_graph(pv));
    REQUIRE((int)s.eigenvalues.size() == 16);
    CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
    // row i of A + D/2 has centre d_i/2 and radius d_i; degrees are 5 or 6
    CHECK(s.eigenvalues.front() <= 9.0);
    CHECK(s.eigenvalues.back() >= -3.0);
    double sum = 0.0;
    for (double l : s.eigenvalues) sum += std::exp(s.alpha * l);
    CHECK(s.character == doctest::Approx(sum).epsilon(1e-13));
  }
}

TEST_CASE("character range over the C30 isomers") {
  const CharacterRange r = character_range(30);
  CHECK(r.n == 30);
  CHECK(r.max == doctest::Approx(141.94385502932448).epsilon(1e-12));
  CHECK(r.min == doctest::Approx(141.79247012778447).epsilon(1e-12));
  CHECK(r.argmax_index == 0);
  CHECK(r.argmin_index == 2);
  // the maximizer is the one-belt nanotube
  CHECK(r.argmax == canonical_pentagon_vector(nanotube_50(1)));
  CHECK(r.has_prev);
  CHECK(r.has_next);
  CHECK(!r.overlaps_prev);
  CHECK(!r.overlaps_next);

  const CharacterRange lone = character_range(20);
  CHECK(lone.min == lone.max);
  CHECK(lone.argmin_index == 0);
  CHECK(!lone.has_prev);   // nothing feasible below 20
  CHECK(!lone.has_next);   // 22 does not exist
  CHECK(code_of([] { character_range(22); }) == ErrorCode::OutOfRange);
}

TEST_CASE("consecutive orders do not overlap at the default weights") {
  double prev_max = character_range(20).max;
  for (int n : {24, 26, 28, 30}) {
    const CharacterRange r = character_range(n);
    CHECK(prev_max < r.min);
    prev_max = r.max;
  }
}

TEST_CASE("normalized character and histograms") {
  CHECK(normalized_character(0.25, 0.0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  const double lo = 88.0, hi = 89.0;
  CHECK(normalized_character(dodecahedron(), lo, hi) ==
        doctest::Approx((kDodecaCharacter - lo) / (hi - lo)).epsilon(1e-13));
  CHECK(code_of([] { normalized_character(2.0, 0.0, 1.0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { normalized_character(0.5, 1.0, 1.0); }) == ErrorCode::OutOfRange);

  const auto h = histogram({0.5, 1.5, 2.5}, 3, 0.0, 3.0);
  CHECK(h == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
  // out-of-range values land in the edge bins, hi in the last
  CHECK(histogram({-5.0, 3.0}, 3, 0.0, 3.0) == std::vector<double>{0.5, 0.0, 0.5});
  // densities integrate to one
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> uni(0.0, 10.0);
  std::vector<double> vals(1000);
  for (double& v : vals) v = uni(gen);
  const auto hh = histogram(vals, 17, 0.0, 10.0);
  const double width = 10.0 / 17;
  double integral = 0.0;
  for (double d : hh) integral += d * width;
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(code_of([] { histogram({}, 3, 0.0, 1.0); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { histogram({1.0}, 0, 0.0, 1.0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { histogram({1.0}, 3, 1.0, 1.0); }) == ErrorCode::OutOfRange);
}
