#include "phaseshift/refwave.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace phaseshift {
namespace {

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::NonpositiveK, "wavenumber must be positive, got " + std::to_string(k));
  }
}

ReferenceWave finish_reference(const Grid& grid, double k, std::vector<cplx> psi, std::vector<cplx> dpsi) {
  const std::size_t n = grid.n_points();
  std::vector<cplx> rho(n);
  std::vector<cplx> q(n);
  const cplx ratio0 = std::conj(psi[0]) / psi[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (psi[i] == cplx{0.0, 0.0}) {
      throw Error(ErrorCode::NodeDetected, "psi0 vanishes at x = " + std::to_string(grid.x(i)));
    }
    rho[i] = psi[i] * psi[i];
    q[i] = std::conj(psi[i]) / psi[i] - ratio0;
  }
  q[0] = 0.0;
  const double residual = wronskian_residual(psi, dpsi, k);
  const double delta0 = phase_from_origin_value(psi[0]);
  return ReferenceWave{k,
                       ComplexGridFunction(grid, std::move(psi)),
                       ComplexGridFunction(grid, std::move(dpsi)),
                       ComplexGridFunction(grid, std::move(rho)),
                       ComplexGridFunction(grid, std::move(q)),
                       delta0,
                       residual};
}

}  // namespace

InwardSolution integrate_inward(const Grid& grid, double k, const CellSamples& potential) {
  const std::size_t n = grid.n_points();
  const double h = grid.step();
  const double k2 = k * k;
  InwardSolution out{std::vector<cplx>(n), std::vector<cplx>(n)};

  const cplx ik{0.0, k};
  out.psi[n - 1] = std::exp(-ik * grid.x_max());
  out.dpsi[n - 1] = -ik * out.psi[n - 1];

  // y = (psi, psi'), y' = (psi', (2W - k^2) psi); stepping from x_{i+1} to x_i.
  const double dx = -h;
  for (std::size_t i = n - 1; i-- > 0;) {
    const cplx p = out.psi[i + 1];
    const cplx d = out.dpsi[i + 1];
    const double g_start = 2.0 * potential.end[i] - k2;
    const double g_mid = 2.0 * potential.mid[i] - k2;
    const double g_end = 2.0 * potential.start[i] - k2;

    const cplx k1p = d;
    const cplx k1d = g_start * p;
    const cplx k2p = d + 0.5 * dx * k1d;
    const cplx k2d = g_mid * (p + 0.5 * dx * k1p);
    const cplx k3p = d + 0.5 * dx * k2d;
    const cplx k3d = g_mid * (p + 0.5 * dx * k2p);
    const cplx k4p = d + dx * k3d;
    const cplx k4d = g_end * (p + dx * k3p);

    out.psi[i] = p + (dx / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    out.dpsi[i] = d + (dx / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
  }
  return out;
}

double wronskian_residual(std::span<const cplx> psi, std::span<const cplx> dpsi, double k) {
  const cplx expected{0.0, 2.0 * k};
  double worst = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const cplx w = psi[i] * std::conj(dpsi[i]) - std::conj(psi[i]) * dpsi[i];
    worst = std::max(worst, std::abs(w - expected));
  }
  return worst;
}

double phase_from_origin_value(cplx psi_at_zero) {
  const double theta = std::arg(std::conj(psi_at_zero) / psi_at_zero);
  double delta = -0.5 * theta;
  if (delta <= -std::numbers::pi / 2) delta += std::numbers::pi;
  return delta;
}

ReferenceWave solve_reference(const PotentialSpec& V, double k, const Grid& grid, const ReferenceOptions& options) {
  require_positive_k(k);
  auto solution = integrate_inward(grid, k, sample_cells(V, grid));
  ReferenceWave ref = finish_reference(grid, k, std::move(solution.psi), std::move(solution.dpsi));
  const double tol = options.tolerance_for(k);
  if (!(ref.wronskian_residual <= tol)) {
    throw Error(ErrorCode::WronskianViolation, "Wronskian residual " + std::to_string(ref.wronskian_residual) +
                                                   " exceeds tolerance " + std::to_string(tol));
  }
  return ref;
}

ReferenceWave analytic_free_reference(double k, const Grid& grid) {
  require_positive_k(k);
  const std::size_t n = grid.n_points();
  std::vector<cplx> psi(n);
  std::vector<cplx> dpsi(n);
  for (std::size_t i = 0; i < n; ++i) {
    psi[i] = std::polar(1.0, -k * grid.x(i));
    dpsi[i] = cplx{0.0, -k} * psi[i];
  }
  ReferenceWave ref = finish_reference(grid, k, std::move(psi), std::move(dpsi));
  // Use the exact closed forms rather than the division above.
  std::vector<cplx> rho(n);
  std::vector<cplx> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = std::polar(1.0, -2.0 * k * grid.x(i));
    q[i] = std::polar(1.0, 2.0 * k * grid.x(i)) - 1.0;
  }
  q[0] = 0.0;
  ref.rho = ComplexGridFunction(grid, std::move(rho));
  ref.q = ComplexGridFunction(grid, std::move(q));
  return ref;
}

}  // namespace phaseshift
