#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phaseshift/grid.hpp"
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

double weighted_sum(const Grid& g, auto&& fn) {
  const auto w = simpson_weights(g);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * fn(g.x(i));
  return s;
}

}  // namespace

TEST_CASE("grid construction enforces odd point counts") {
  const Grid g(2.0, 5);
  CHECK(g.step() == 0.5);
  CHECK(g.x(0) == 0.0);
  CHECK(g.x(4) == 2.0);
  CHECK(Grid(5.0, 4001).x(800) == 1.0);

  CHECK(code_of([] { Grid(2.0, 4); }) == ErrorCode::EvenPointCount);
  CHECK(code_of([] { Grid(2.0, 1); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { Grid(0.0, 5); }) == ErrorCode::InvalidGrid);
  CHECK(Grid(5.0, 11).refined(4).n_points() == 41);
}

TEST_CASE("grid functions reject NaN and wrong lengths") {
  const Grid g(1.0, 3);
  CHECK(code_of([&] { ComplexGridFunction(g, {1.0, 2.0}); }) == ErrorCode::GridMismatch);
  CHECK(code_of([&] { RealGridFunction(g, {1.0, std::nan(""), 0.0}); }) == ErrorCode::NonFiniteValue);
}

TEST_CASE("simpson weights") {
  SUBCASE("three-point rule") {
    const auto w = simpson_weights(Grid(2.0, 3));
    REQUIRE(w.size() == 3);
    CHECK(w[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(w[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("sin over [0, pi]") {
    // The n = 101 error is 1.08e-8 (pi h^4 / 180 with h = pi/100), just above 1e-8.
    const double s101 = weighted_sum(Grid(std::numbers::pi, 101), [](double x) { return std::sin(x); });
    CHECK(std::abs(s101 - 2.0) < 1.1e-8);
    const double s201 = weighted_sum(Grid(std::numbers::pi, 201), [](double x) { return std::sin(x); });
    CHECK(std::abs(s201 - 2.0) < 1e-9);
  }
  SUBCASE("weights sum to the interval length") {
    const auto w = simpson_weights(Grid(5.0, 101));
    double s = 0.0;
    for (double v : w) s += v;
    CHECK(std::abs(s - 5.0) < 1e-12);
  }
}

TEST_CASE("simpson integrates random cubics exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> length(0.5, 8.0);
  std::uniform_int_distribution<int> half(1, 200);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    const double L = length(rng);
    const Grid g(L, 2 * static_cast<std::size_t>(half(rng)) + 1);
    const double exact = a * L + b * L * L / 2 + c * L * L * L / 3 + d * L * L * L * L / 4;
    const double got = weighted_sum(g, [&](double x) { return a + b * x + c * x * x + d * x * x * x; });
    CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("cumulative integral from the right") {
  const Grid g(3.0, 301);
  std::vector<cplx> f(g.n_points());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::exp(cplx{0.0, 2.0 * g.x(i)});
  const auto c = cumulative_from_right(g, std::span<const cplx>(f));
  CHECK(c.back() == cplx{0.0, 0.0});
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    // int_x^3 e^{2iz} dz = (e^{6i} - e^{2ix}) / (2i)
    const cplx exact = (std::exp(cplx{0.0, 6.0}) - std::exp(cplx{0.0, 2.0 * g.x(i)})) / cplx{0.0, 2.0};
    worst = std::max(worst, std::abs(c[i] - exact));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("cumulative integral of a step on an even node keeps full accuracy") {
  const Grid g(2.0, 201);  // x = 1 is node 100
  OneSidedSamples f{std::vector<cplx>(g.n_points()), std::vector<cplx>(g.n_points())};
  for (std::size_t i = 0; i < g.n_points(); ++i) {
    const double x = g.x(i);
    const double smooth = std::cos(x);
    f.right[i] = x < 1.0 ? smooth : 0.0;
    f.left[i] = x <= 1.0 ? smooth : 0.0;
  }
  f.left[0] = f.right[0];
  const auto c = cumulative_from_right(g, f);
  CHECK(std::abs(c[0].real() - std::sin(1.0)) < 1e-10);
  CHECK(c[100] == cplx{0.0, 0.0});
}

TEST_CASE("cumulative integral converges at fourth order for smooth integrands") {
  auto error_at = [](std::size_t n) {
    const Grid g(2.0, n);
    std::vector<cplx> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(-g.x(i)) * std::cos(3.0 * g.x(i));
    const auto c = cumulative_from_right(g, std::span<const cplx>(f));
    // Antiderivative of e^{-x} cos 3x is e^{-x}(3 sin 3x - cos 3x)/10.
    auto F = [](double x) { return std::exp(-x) * (3.0 * std::sin(3.0 * x) - std::cos(3.0 * x)) / 10.0; };
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(c[i].real() - (F(2.0) - F(g.x(i)))));
    return worst;
  };
  const double coarse = error_at(81);
  const double fine = error_at(161);
  CHECK(std::log2(coarse / fine) > 3.5);
}
