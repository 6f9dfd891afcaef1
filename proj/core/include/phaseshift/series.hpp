#pragma once

#include <span>
#include <vector>

#include "phaseshift/hierarchy.hpp"
#include "phaseshift/partitions.hpp"

namespace phaseshift {

struct PhaseSeries {
  double k = 0.0;
  double delta0 = 0.0;
  std::vector<double> corrections;  // corrections[n-1] = delta_n
  std::vector<cplx> f_at_zero;
  int max_order = 0;
};

/// delta_n = Im sum over multiplicity tuples of coefficient * f_1^i_1 ... f_n^i_n.
/// Throws OrderOutOfRange, InsufficientFValues.
double assemble_delta_n(std::span<const cplx> f_at_zero, int n);

/// Same Taylor coefficient from the power-series logarithm recurrence
/// c_n = f_n - (1/n) sum_{m<n} m c_m f_{n-m}.
double log_expansion_reference(std::span<const cplx> f_at_zero, int n);

PhaseSeries assemble_series(const ReferenceWave& ref, const EvaluatedPotential& U, int max_order);

/// delta0 + sum_{n=1}^{truncation} lambda^n delta_n. Throws TruncationTooHigh.
double evaluate_truncated(const PhaseSeries& series, double lambda, int truncation);

/// Heuristic: |lambda^n delta_n| non-decreasing over the last three orders.
bool divergence_warning(const PhaseSeries& series, double lambda);

}  // namespace phaseshift
