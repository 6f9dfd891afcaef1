#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "phaseshift/potential.hpp"
#include "phaseshift/refwave.hpp"
#include "phaseshift/series.hpp"

namespace phaseshift {

struct OracleResult {
  double lambda = 0.0;
  double delta_exact = 0.0;  // principal value unless produced by solve_sweep
  cplx psi_at_zero;
  double wronskian_residual = 0.0;
};

/// Direct RK4 solution of -psi''/2 + (V + lambda U) psi = k^2 psi / 2 with psi = exp(-ikx) at x_max.
/// Throws NonpositiveK, SupportBeyondGrid, WronskianViolation.
OracleResult solve_exact(const PotentialSpec& V, const PotentialSpec& U, double lambda, double k,
                         const Grid& grid, const ReferenceOptions& options = {});

/// Solves each coupling and unwraps the phase to the branch nearest the previous point, seeded by delta0.
std::vector<OracleResult> solve_sweep(const PotentialSpec& V, const PotentialSpec& U,
                                      std::span<const double> lambdas, double k, double delta0,
                                      const Grid& grid, const ReferenceOptions& options = {});

/// Branch of `delta` (mod pi) closest to `reference`.
double unwrap_phase(double delta, double reference);

enum class OrderStatus { Pass, Fail, Inconclusive };

std::string_view to_string(OrderStatus status) noexcept;

struct OrderEstimate {
  int truncation = 0;
  std::vector<double> remainders;    // R_N(lambda) for each sweep coupling
  std::vector<double> noise_floor;   // quadrature noise estimate for each coupling
  std::vector<double> order_by_pair; // log2(R(2 lambda)/R(lambda)) for consecutive pairs
  double p_hat = 0.0;                // smallest pair
  OrderStatus status = OrderStatus::Inconclusive;
};

struct ConvergenceReport {
  std::vector<double> lambdas;
  std::vector<OracleResult> oracle;
  std::vector<OrderEstimate> orders;  // orders[N-1] for truncation N
};

struct ConvergenceOptions {
  ReferenceOptions reference;
  int oracle_refinement = 4;
  double noise_margin = 10.0;
};

/// Empirical remainder order of the truncated series against the oracle.
///
/// `lambdas` must decrease by a factor 2 per entry with |lambda delta_1| < 0.1.
/// The series grid is needed to rebuild the oracle (4x finer) and the noise
/// estimate (series on a 2x finer grid). Throws InvalidSweep.
ConvergenceReport convergence_order_check(const PhaseSeries& series, const PotentialSpec& V,
                                          const PotentialSpec& U, std::span<const double> lambdas,
                                          const Grid& series_grid, const ConvergenceOptions& options = {});

}  // namespace phaseshift
