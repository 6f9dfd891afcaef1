#include "phaseshift/hierarchy.hpp"

#include <string>

#include "phaseshift/quadrature.hpp"

namespace phaseshift {
namespace {

void zero_beyond_support(const Grid& grid, double support_hi, std::vector<cplx>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (grid.x(i) >= support_hi) values[i] = 0.0;
  }
}

}  // namespace

// Constant placement: integrating (rho f_n')' = 2 U rho f_{n-1} twice and using
// rho q' = 2ik gives int_x^z dy / rho = (q(z) - q(x)) / (2ik), so the operator
// carries U (not 2U) under a 1/(ik) prefactor. This reproduces
// delta_1 = -(1/k) Re I[U rho q] and matches compute_fn_double_integral.
ComplexGridFunction apply_J(const ReferenceWave& ref, const EvaluatedPotential& U, const ComplexGridFunction& g) {
  const Grid& grid = ref.grid();
  require_same_grid(grid, U.grid, "apply_J");
  require_same_grid(grid, g.grid(), "apply_J");

  const std::size_t n = grid.n_points();
  std::vector<cplx> rho_g(n);
  std::vector<cplx> rho_q_g(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho_g[i] = ref.rho[i] * g[i];
    rho_q_g[i] = rho_g[i] * ref.q[i];
  }
  const auto a = cumulative_from_right(grid, U.times(rho_q_g));
  const auto b = cumulative_from_right(grid, U.times(rho_g));

  const cplx inv_ik = 1.0 / cplx{0.0, ref.k};
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = inv_ik * (a[i] - ref.q[i] * b[i]);
  zero_beyond_support(grid, U.support_hi, out);
  return ComplexGridFunction(grid, std::move(out));
}

HierarchyResult compute_hierarchy(const ReferenceWave& ref, const EvaluatedPotential& U, int max_order) {
  if (max_order < 1) {
    throw Error(ErrorCode::OrderOutOfRange, "hierarchy order must be at least 1, got " + std::to_string(max_order));
  }
  HierarchyResult result;
  result.order = max_order;
  result.f.reserve(static_cast<std::size_t>(max_order));
  result.f_at_zero.reserve(static_cast<std::size_t>(max_order));

  ComplexGridFunction previous = ComplexGridFunction::constant(ref.grid(), 1.0);
  for (int n = 1; n <= max_order; ++n) {
    ComplexGridFunction next = apply_J(ref, U, previous);
    result.f_at_zero.push_back(next[0]);
    result.f.push_back(next);
    previous = std::move(next);
  }
  return result;
}

ComplexGridFunction compute_fn_double_integral(const ReferenceWave& ref, const EvaluatedPotential& U,
                                               const ComplexGridFunction& f_prev) {
  const Grid& grid = ref.grid();
  require_same_grid(grid, U.grid, "compute_fn_double_integral");
  require_same_grid(grid, f_prev.grid(), "compute_fn_double_integral");

  const std::size_t n = grid.n_points();
  std::vector<cplx> two_rho_f(n);
  for (std::size_t i = 0; i < n; ++i) two_rho_f[i] = 2.0 * ref.rho[i] * f_prev[i];
  const auto inner = cumulative_from_right(grid, U.times(two_rho_f));

  std::vector<cplx> outer_integrand(n);
  for (std::size_t i = 0; i < n; ++i) outer_integrand[i] = inner[i] / ref.rho[i];
  auto out = cumulative_from_right(grid, std::span<const cplx>(outer_integrand));
  zero_beyond_support(grid, U.support_hi, out);
  return ComplexGridFunction(grid, std::move(out));
}

}  // namespace phaseshift
