#include <doctest.h>

#include <cmath>
#include <random>

#include "phaseshift/hierarchy.hpp"
#include "phaseshift/quadrature.hpp"

using namespace phaseshift;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected phaseshift::Error");
  return ErrorCode::InvalidGrid;
}

PotentialSpec random_smooth(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> center(0.3, 2.0);
  std::uniform_real_distribution<double> width(0.1, 0.35);
  std::uniform_real_distribution<double> height(-0.5, 0.5);
  std::uniform_int_distribution<int> count(1, 3);
  GaussianSum g;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) g.bumps.push_back({center(rng), width(rng), height(rng)});
  return PotentialSpec(g);
}

// J[g](x_i) by direct quadrature of U rho (q(z) - q(x_i)) g(z) over [x_i, x_max] for every i. O(n^2).
std::vector<cplx> naive_J(const ReferenceWave& ref, const EvaluatedPotential& U, const ComplexGridFunction& g) {
  const Grid& grid = ref.grid();
  const std::size_t n = grid.n_points();
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Trapezoid on [x_i, x_max] with one-sided potential values at the interval ends.
    cplx sum{0.0, 0.0};
    for (std::size_t j = i; j + 1 < n; ++j) {
      const cplx a = U.right[j] * ref.rho[j] * (ref.q[j] - ref.q[i]) * g[j];
      const cplx b = U.left[j + 1] * ref.rho[j + 1] * (ref.q[j + 1] - ref.q[i]) * g[j + 1];
      sum += 0.5 * grid.step() * (a + b);
    }
    out[i] = sum / cplx{0.0, ref.k};
  }
  return out;
}

}  // namespace

TEST_CASE("J of a vanishing perturbation is zero") {
  const Grid g(5.0, 401);
  const ReferenceWave ref = analytic_free_reference(1.0, g);
  const auto U = evaluate_potential(PotentialSpec::zero(), g);
  const auto h = apply_J(ref, U, ComplexGridFunction::constant(g, 1.0));
  for (std::size_t i = 0; i < g.n_points(); ++i) CHECK(h[i] == cplx{0.0, 0.0});

  const auto res = compute_hierarchy(ref, U, 3);
  for (const auto& f : res.f) {
    for (std::size_t i = 0; i < g.n_points(); ++i) CHECK(f[i] == cplx{0.0, 0.0});
  }
}

TEST_CASE("first order for a unit barrier on a free reference") {
  const Grid g(5.0, 4001);
  const ReferenceWave ref = analytic_free_reference(1.0, g);
  const auto U = evaluate_potential(PotentialSpec::barrier(0.0, 1.0, 1.0), g);
  const auto f1 = apply_J(ref, U, ComplexGridFunction::constant(g, 1.0));
  // Im f_1(0) = -(1/k) int_0^L (1 - cos 2kx) dx = -(1 - sin 2 / 2).
  CHECK(std::abs(f1[0].imag() - (-(1.0 - std::sin(2.0) / 2.0))) < 1e-10);
  // Re f_1(0) = (1/k) int_0^L sin 2kx dx = (1 - cos 2)/2.
  CHECK(std::abs(f1[0].real() - (1.0 - std::cos(2.0)) / 2.0) < 1e-10);
  CHECK(f1[g.n_points() - 1] == cplx{0.0, 0.0});
}

TEST_CASE("hierarchy is the repeated composition of J") {
  const Grid g(5.0, 801);
  std::mt19937_64 rng(3);
  const ReferenceWave ref = solve_reference(random_smooth(rng), 1.1, g);
  const auto U = evaluate_potential(random_smooth(rng), g);
  const auto res = compute_hierarchy(ref, U, 2);
  const auto manual = apply_J(ref, U, apply_J(ref, U, ComplexGridFunction::constant(g, 1.0)));
  REQUIRE(res.f.size() == 2);
  for (std::size_t i = 0; i < g.n_points(); ++i) CHECK(res.f[1][i] == manual[i]);
  CHECK(res.f_at_zero[0] == res.f[0][0]);
  CHECK(res.f_at_zero[1] == res.f[1][0]);
  CHECK(code_of([&] { compute_hierarchy(ref, U, 0); }) == ErrorCode::OrderOutOfRange);
}

TEST_CASE("split-cumulant J matches the direct nested form") {
  const Grid g(4.0, 201);
  std::mt19937_64 rng(5);
  const ReferenceWave ref = solve_reference(random_smooth(rng), 0.9, g);
  const auto U = evaluate_potential(random_smooth(rng), g);
  const auto fast = apply_J(ref, U, ComplexGridFunction::constant(g, 1.0));
  const auto slow = naive_J(ref, U, ComplexGridFunction::constant(g, 1.0));
  // The naive form uses the trapezoid rule: O(h^2) agreement.
  for (std::size_t i = 0; i < g.n_points(); ++i) {
    if (g.x(i) >= U.support_hi) continue;
    CHECK(std::abs(fast[i] - slow[i]) < 5e-4 * std::max(1.0, std::abs(fast[i])));
  }
}

TEST_CASE("single- and double-integral paths agree") {
  std::mt19937_64 rng(17);
  const Grid g(5.0, 4001);
  for (int trial = 0; trial < 4; ++trial) {
    const ReferenceWave ref = solve_reference(trial % 2 ? random_smooth(rng) : PotentialSpec::zero(), 1.2, g);
    const auto U = evaluate_potential(random_smooth(rng), g);
    ComplexGridFunction f = ComplexGridFunction::constant(g, 1.0);
    for (int n = 1; n <= 3; ++n) {
      const auto single = apply_J(ref, U, f);
      const auto twice = compute_fn_double_integral(ref, U, f);
      CHECK(std::abs(single[0] - twice[0]) <= 1e-6 * std::max(1.0, std::abs(single[0])));
      CHECK(twice[g.n_points() - 1] == cplx{0.0, 0.0});
      f = single;
    }
  }
}

TEST_CASE("f_n vanishes beyond the support of U") {
  const Grid g(5.0, 1001);
  const ReferenceWave ref = solve_reference(PotentialSpec::barrier(0.0, 2.5, 0.2), 1.0, g);
  const auto U = evaluate_potential(PotentialSpec(PiecewiseConstant{{{0.5, 1.3, 0.7}, {1.3, 2.2, -0.4}}}), g);
  const auto res = compute_hierarchy(ref, U, 4);
  for (const auto& f : res.f) {
    for (std::size_t i = 0; i < g.n_points(); ++i) {
      if (g.x(i) >= 2.2) CHECK(f[i] == cplx{0.0, 0.0});
    }
  }
}

TEST_CASE("f_1 is linear in U") {
  const Grid g(5.0, 801);
  const ReferenceWave ref = solve_reference(PotentialSpec(GaussianSum{{{1.0, 0.3, 0.3}}}), 1.0, g);
  const PotentialSpec U(GaussianSum{{{1.5, 0.25, 0.6}}});
  const auto f1 = apply_J(ref, evaluate_potential(U, g), ComplexGridFunction::constant(g, 1.0));
  const auto f1c = apply_J(ref, evaluate_potential(U.scaled(3.0), g), ComplexGridFunction::constant(g, 1.0));
  for (std::size_t i = 0; i < g.n_points(); ++i) {
    CHECK(std::abs(f1c[i] - 3.0 * f1[i]) <= 1e-12 * std::max(1.0, std::abs(f1c[i])));
  }
}

TEST_CASE("grid convergence of f_n(0)") {
  auto f_at_zero = [](std::size_t n, const PotentialSpec& U) {
    const Grid g(5.0, n);
    const ReferenceWave ref = solve_reference(PotentialSpec(GaussianSum{{{1.0, 0.3, 0.3}}}), 1.0, g);
    return compute_hierarchy(ref, evaluate_potential(U, g), 3).f_at_zero;
  };
  SUBCASE("smooth U converges at fourth order") {
    const PotentialSpec U(GaussianSum{{{1.5, 0.25, 0.6}}});
    const auto a = f_at_zero(201, U), b = f_at_zero(401, U), c = f_at_zero(801, U);
    for (int n = 0; n < 3; ++n) CHECK(std::log2(std::abs(a[n] - b[n]) / std::abs(b[n] - c[n])) > 3.5);
  }
  SUBCASE("piecewise U with jumps on even nodes is not worse than second order") {
    const PotentialSpec U = PotentialSpec::barrier(0.0, 1.0, 1.0);
    const auto a = f_at_zero(201, U), b = f_at_zero(401, U), c = f_at_zero(801, U);
    for (int n = 0; n < 3; ++n) CHECK(std::log2(std::abs(a[n] - b[n]) / std::abs(b[n] - c[n])) > 1.8);
  }
}

TEST_CASE("grid mismatches are rejected") {
  const ReferenceWave ref = analytic_free_reference(1.0, Grid(5.0, 401));
  const auto U = evaluate_potential(PotentialSpec::zero(), Grid(5.0, 201));
  CHECK(code_of([&] { apply_J(ref, U, ComplexGridFunction::constant(Grid(5.0, 401), 1.0)); }) ==
        ErrorCode::GridMismatch);
  CHECK(code_of([&] { compute_fn_double_integral(ref, U, ComplexGridFunction::constant(Grid(5.0, 401), 1.0)); }) ==
        ErrorCode::GridMismatch);
}
