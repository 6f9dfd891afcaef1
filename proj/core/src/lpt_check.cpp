#include "phaseshift/lpt_check.hpp"

#include <string>

namespace phaseshift {

NestedIntegrandSet::NestedIntegrandSet(Grid grid, std::vector<OneSidedSamples> factors)
    : grid_(grid), factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > 3) {
    throw Error(ErrorCode::OrderOutOfRange, "nested integrals take 1 to 3 factors, got " +
                                                std::to_string(factors_.size()));
  }
  for (const auto& f : factors_) {
    if (f.left.size() != grid_.n_points() || f.right.size() != grid_.n_points()) {
      throw Error(ErrorCode::GridMismatch, "nested integral factor does not match the grid");
    }
  }
}

cplx nested_integral(const NestedIntegrandSet& set) {
  const Grid& grid = set.grid();
  const auto& factors = set.factors();
  // G_n = int_x F_n; G_m = int_x F_m G_{m+1}; the answer is G_1(0).
  std::vector<cplx> inner = cumulative_from_right(grid, factors.back());
  for (std::size_t m = factors.size() - 1; m-- > 0;) {
    OneSidedSamples product = factors[m];
    for (std::size_t i = 0; i < inner.size(); ++i) {
      product.left[i] *= inner[i];
      product.right[i] *= inner[i];
    }
    inner = cumulative_from_right(grid, product);
  }
  return inner[0];
}

namespace {

// U rho q^power as one-sided samples.
OneSidedSamples u_rho_q(const ReferenceWave& ref, const EvaluatedPotential& U, int power) {
  require_same_grid(ref.grid(), U.grid, "lpt_check");
  std::vector<cplx> f(ref.grid().n_points());
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx v = ref.rho[i];
    for (int p = 0; p < power; ++p) v *= ref.q[i];
    f[i] = v;
  }
  return U.times(f);
}

}  // namespace

double delta1_lpt(const ReferenceWave& ref, const EvaluatedPotential& U) {
  const NestedIntegrandSet set(ref.grid(), {u_rho_q(ref, U, 1)});
  return -nested_integral(set).real() / ref.k;
}

double delta2_lpt(const ReferenceWave& ref, const EvaluatedPotential& U) {
  const NestedIntegrandSet set(ref.grid(), {u_rho_q(ref, U, 2), u_rho_q(ref, U, 0)});
  return nested_integral(set).imag() / (ref.k * ref.k);
}

double delta3_lpt(const ReferenceWave& ref, const EvaluatedPotential& U) {
  const NestedIntegrandSet set(ref.grid(), {u_rho_q(ref, U, 2), u_rho_q(ref, U, 1), u_rho_q(ref, U, 0)});
  return 2.0 * nested_integral(set).real() / (ref.k * ref.k * ref.k);
}

}  // namespace phaseshift
