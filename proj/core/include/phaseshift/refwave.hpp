#pragma once

#include <optional>

#include "phaseshift/grid.hpp"
#include "phaseshift/potential.hpp"

namespace phaseshift {

/// Unperturbed wave psi0 with psi0 = exp(-ikx) at x_max, plus the derived
/// rho = psi0^2, q = psi0*/psi0 - psi0*(0)/psi0(0) and the phase shift delta0.
struct ReferenceWave {
  double k;
  ComplexGridFunction psi0;
  ComplexGridFunction dpsi0;
  ComplexGridFunction rho;
  ComplexGridFunction q;
  double delta0;               // principal value in (-pi/2, pi/2]
  double wronskian_residual;   // max_i |psi0 psi0*' - psi0* psi0' - 2ik|

  const Grid& grid() const noexcept { return psi0.grid(); }
};

struct ReferenceOptions {
  /// Defaults to 1e-8 * k.
  std::optional<double> tol_wronskian;

  double tolerance_for(double k) const { return tol_wronskian.value_or(1e-8 * k); }
};

/// Wave amplitude and derivative from integrating psi'' = (2W - k^2) psi inward
/// from x_max with one classical RK4 step per grid cell.
struct InwardSolution {
  std::vector<cplx> psi;
  std::vector<cplx> dpsi;
};

InwardSolution integrate_inward(const Grid& grid, double k, const CellSamples& potential);

/// max_i |psi psi*' - psi* psi' - 2ik|
double wronskian_residual(std::span<const cplx> psi, std::span<const cplx> dpsi, double k);

/// delta = -arg(psi*(0)/psi(0)) / 2 reduced to (-pi/2, pi/2].
double phase_from_origin_value(cplx psi_at_zero);

/// Throws NonpositiveK, SupportBeyondGrid, WronskianViolation, NodeDetected.
ReferenceWave solve_reference(const PotentialSpec& V, double k, const Grid& grid,
                              const ReferenceOptions& options = {});

/// Exact free wave exp(-ikx). Throws NonpositiveK.
ReferenceWave analytic_free_reference(double k, const Grid& grid);

}  // namespace phaseshift
