#include "phaseshift/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace phaseshift {

OracleResult solve_exact(const PotentialSpec& V, const PotentialSpec& U, double lambda, double k, const Grid& grid,
                         const ReferenceOptions& options) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::NonpositiveK, "wavenumber must be positive, got " + std::to_string(k));
  }
  const CellSamples total = sample_cells(V, grid).plus_scaled(sample_cells(U, grid), lambda);
  const InwardSolution sol = integrate_inward(grid, k, total);

  OracleResult r;
  r.lambda = lambda;
  r.psi_at_zero = sol.psi[0];
  r.wronskian_residual = wronskian_residual(sol.psi, sol.dpsi, k);
  const double tol = options.tolerance_for(k);
  if (!(r.wronskian_residual <= tol)) {
    throw Error(ErrorCode::WronskianViolation, "oracle Wronskian residual " + std::to_string(r.wronskian_residual) +
                                                   " exceeds tolerance " + std::to_string(tol));
  }
  r.delta_exact = phase_from_origin_value(r.psi_at_zero);
  return r;
}

double unwrap_phase(double delta, double reference) {
  return delta + std::numbers::pi * std::round((reference - delta) / std::numbers::pi);
}

std::vector<OracleResult> solve_sweep(const PotentialSpec& V, const PotentialSpec& U, std::span<const double> lambdas,
                                      double k, double delta0, const Grid& grid, const ReferenceOptions& options) {
  std::vector<OracleResult> out;
  out.reserve(lambdas.size());
  double previous = delta0;
  for (double lambda : lambdas) {
    OracleResult r = solve_exact(V, U, lambda, k, grid, options);
    r.delta_exact = unwrap_phase(r.delta_exact, previous);
    previous = r.delta_exact;
    out.push_back(r);
  }
  return out;
}

std::string_view to_string(OrderStatus status) noexcept {
  switch (status) {
    case OrderStatus::Pass: return "PASS";
    case OrderStatus::Fail: return "FAIL";
    case OrderStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

namespace {

void validate_sweep(const PhaseSeries& series, std::span<const double> lambdas) {
  if (lambdas.size() < 2) throw Error(ErrorCode::InvalidSweep, "need at least two couplings");
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    const double ratio = lambdas[i] / lambdas[i + 1];
    if (!(std::abs(ratio - 2.0) <= 1e-12)) {
      throw Error(ErrorCode::InvalidSweep, "couplings must halve at every step");
    }
  }
  if (series.max_order >= 1) {
    const double largest = std::abs(lambdas.front() * series.corrections.front());
    if (!(largest < 0.1)) {
      throw Error(ErrorCode::InvalidSweep, "|lambda delta_1| = " + std::to_string(largest) + " is not below 0.1");
    }
  }
}

}  // namespace

ConvergenceReport convergence_order_check(const PhaseSeries& series, const PotentialSpec& V, const PotentialSpec& U,
                                          std::span<const double> lambdas, const Grid& series_grid,
                                          const ConvergenceOptions& options) {
  validate_sweep(series, lambdas);

  ConvergenceReport report;
  report.lambdas.assign(lambdas.begin(), lambdas.end());

  const Grid oracle_grid = series_grid.refined(static_cast<std::size_t>(options.oracle_refinement));
  report.oracle = solve_sweep(V.resampled(oracle_grid), U.resampled(oracle_grid), lambdas, series.k, series.delta0,
                              oracle_grid, options.reference);

  // Quadrature noise: the same series on a grid twice as fine.
  const Grid fine_grid = series_grid.refined(2);
  const PotentialSpec V_fine = V.resampled(fine_grid);
  const PotentialSpec U_fine = U.resampled(fine_grid);
  const ReferenceWave fine_ref = solve_reference(V_fine, series.k, fine_grid, options.reference);
  PhaseSeries fine = assemble_series(fine_ref, evaluate_potential(U_fine, fine_grid), series.max_order);
  fine.delta0 = unwrap_phase(fine.delta0, series.delta0);

  const std::size_t last = lambdas.size() - 1;
  for (int N = 1; N <= series.max_order; ++N) {
    OrderEstimate est;
    est.truncation = N;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double truncated = evaluate_truncated(series, lambdas[i], N);
      est.remainders.push_back(report.oracle[i].delta_exact - truncated);
      const double rounding = 1e-14 * std::max(1.0, std::abs(truncated));
      est.noise_floor.push_back(std::abs(evaluate_truncated(fine, lambdas[i], N) - truncated) + rounding);
    }
    for (std::size_t i = 0; i < last; ++i) {
      est.order_by_pair.push_back(std::log2(std::abs(est.remainders[i] / est.remainders[i + 1])));
    }
    est.p_hat = est.order_by_pair.back();

    const bool above_noise = std::abs(est.remainders[last]) >= options.noise_margin * est.noise_floor[last] &&
                             std::abs(est.remainders[last - 1]) >= options.noise_margin * est.noise_floor[last - 1];
    if (!above_noise || !std::isfinite(est.p_hat)) {
      est.status = OrderStatus::Inconclusive;
    } else {
      const double expected = N + 1;
      est.status = (est.p_hat >= expected - 0.5 && est.p_hat <= expected + 0.5) ? OrderStatus::Pass : OrderStatus::Fail;
    }
    report.orders.push_back(std::move(est));
  }
  return report;
}

}  // namespace phaseshift
